"""Goal-level conflict graph: derivation from the plan level and filtering.

A goal attacks another goal only when *every* plan for the first conflicts
with *every* plan for the second; the conflict kinds of all those plan
pairs are unioned into the goal pair's label.  Preference then breaks the
symmetry: an attack survives filtering only if its source is at least as
preferred as its target, so strictly dominated directions disappear while
equal-preference pairs keep both.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import InputError
from .instrumental import GeneralAF, IncompatibilityKind, args_for_goal


class Stage(Enum):

    RAW = "raw"
    FILTERED = "successful-filtered"


@dataclass(frozen=True)
class GoalAF:
    """Goals, goal-level attacks with conflict-kind labels, and preferences.

    `stage` records whether preference filtering has been applied; the raw
    stage is symmetric by construction, the filtered stage keeps at most
    one direction per strictly ordered pair.
    """

    goals: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]
    incomp: Mapping[tuple[str, str], frozenset[IncompatibilityKind]]
    pref: Mapping[str, Fraction]
    stage: Stage

    def conflict_pairs(self) -> frozenset[frozenset[str]]:
        """The undirected conflicts underlying the attack relation."""
        return frozenset(frozenset(pair) for pair in self.attacks)


def derive_goal_af(gaf: GeneralAF) -> GoalAF:
    """Lift the instrumental framework to the goal level (raw stage).

    A goal with no plans participates in no attacks: the all-plan-pairs
    condition is only applied between goals that both have at least one
    instrumental argument.
    """
    goal_ids = tuple(sorted(g.id for g in gaf.goals))
    plans = {g: args_for_goal(gaf, g) for g in goal_ids}

    attacks: set[tuple[str, str]] = set()
    incomp: dict[tuple[str, str], frozenset[IncompatibilityKind]] = {}
    for g, h in combinations(goal_ids, 2):
        if not plans[g] or not plans[h]:
            continue
        if not all(
            (a, b) in gaf.attacks or (b, a) in gaf.attacks
            for a in plans[g]
            for b in plans[h]
        ):
            continue
        labels: set[IncompatibilityKind] = set()
        for a in plans[g]:
            for b in plans[h]:
                labels |= gaf.attacks.get((a, b), frozenset())
                labels |= gaf.attacks.get((b, a), frozenset())
        attacks.add((g, h))
        attacks.add((h, g))
        incomp[(g, h)] = frozenset(labels)
        incomp[(h, g)] = frozenset(labels)

    pref = {g.id: g.preference for g in gaf.goals}
    return GoalAF(goal_ids, frozenset(attacks), incomp, pref, Stage.RAW)


def apply_successful_attacks(goal_af: GoalAF) -> GoalAF:
    """Keep an attack only when its source is not strictly less preferred.

    Strictly ordered pairs end up with a single direction (from the
    preferred goal); equal-preference pairs keep both directions.
    Preferences are compared exactly, with no epsilon.
    """
    if goal_af.stage is not Stage.RAW:
        raise InputError("successful-attack filtering expects a raw-stage goal framework")
    kept = frozenset(
        (g, h) for (g, h) in goal_af.attacks if goal_af.pref[g] >= goal_af.pref[h]
    )
    incomp = {pair: goal_af.incomp[pair] for pair in kept}
    return GoalAF(goal_af.goals, kept, incomp, dict(goal_af.pref), Stage.FILTERED)
