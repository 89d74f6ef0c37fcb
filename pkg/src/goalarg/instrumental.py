"""The instrumental-argument level: plans, goals, and labeled attacks.

This framework is the pipeline's *input*: each instrumental argument stands
for a plan achieving a goal, and every attack between two plans is labeled
with the kinds of incompatibility that cause it (terminal, resource,
superfluity).  How those attacks are identified from a knowledge base is
out of scope here; scenario authors state the labeled relation directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InputError, ValidationError


class IncompatibilityKind(Enum):
    """The three closed kinds of conflict between plans."""

    TERMINAL = "t"
    RESOURCE = "r"
    SUPERFLUITY = "s"


# Canonical display order for label sets.
KIND_ORDER = (
    IncompatibilityKind.TERMINAL,
    IncompatibilityKind.RESOURCE,
    IncompatibilityKind.SUPERFLUITY,
)


def kinds_from_letters(letters: Iterable[str]) -> frozenset[IncompatibilityKind]:
    return frozenset(IncompatibilityKind(letter) for letter in letters)


def format_kinds(kinds: frozenset[IncompatibilityKind]) -> str:
    """Render a label set as its letters in fixed t, r, s order: "t,r"."""
    return ",".join(k.value for k in KIND_ORDER if k in kinds)


@dataclass(frozen=True)
class GoalDecl:
    """A pursuable goal: opaque id, display predicate, preference in (0, 1]."""

    id: str
    predicate: str
    preference: Fraction


@dataclass(frozen=True)
class InstrumentalArgDecl:
    """A plan argument: which goal it achieves and its sub-plan arguments."""

    id: str
    claim: str
    sub_args: tuple[str, ...] = ()


@dataclass(frozen=True)
class GeneralAF:
    """Instrumental arguments plus the labeled attack relation between them.

    `attacks` maps each directed pair to its nonempty incompatibility label
    set; the per-kind relations are recoverable by filtering on the labels.
    """

    goals: tuple[GoalDecl, ...]
    args: tuple[InstrumentalArgDecl, ...]
    attacks: Mapping[tuple[str, str], frozenset[IncompatibilityKind]]

    def goal_map(self) -> dict[str, GoalDecl]:
        return {g.id: g for g in self.goals}

    def arg_map(self) -> dict[str, InstrumentalArgDecl]:
        return {a.id: a for a in self.args}

    def attacks_with_kind(self, kind: IncompatibilityKind) -> frozenset[tuple[str, str]]:
        return frozenset(pair for pair, labels in self.attacks.items() if kind in labels)


@dataclass(frozen=True)
class ValidationIssue:
    severity: str  # "error" | "warning"
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity} at {self.location}: {self.message}"


def validate(gaf: GeneralAF) -> list[ValidationIssue]:
    """Check all framework invariants; returns every violation found.

    Asymmetric attack labeling (a pair present without its reverse, or with
    differing labels) is reported as a warning, not an error: symmetry holds
    in every construction we know of, but nothing forbids other inputs.
    """
    issues: list[ValidationIssue] = []

    seen_goals: set[str] = set()
    for i, goal in enumerate(gaf.goals):
        loc = f"goals[{i}] ({goal.id})"
        if goal.id in seen_goals:
            issues.append(ValidationIssue("error", loc, "duplicate goal id"))
        seen_goals.add(goal.id)
        if not goal.predicate:
            issues.append(ValidationIssue("error", loc, "empty predicate"))
        if not (0 < goal.preference <= 1):
            issues.append(
                ValidationIssue("error", loc, f"preference {goal.preference} outside (0, 1]")
            )

    goal_ids = {g.id for g in gaf.goals}
    seen_args: set[str] = set()
    for i, arg in enumerate(gaf.args):
        loc = f"arguments[{i}] ({arg.id})"
        if arg.id in seen_args:
            issues.append(ValidationIssue("error", loc, "duplicate argument id"))
        seen_args.add(arg.id)
        if arg.claim not in goal_ids:
            issues.append(ValidationIssue("error", loc, f"claim references unknown goal {arg.claim!r}"))

    arg_ids = {a.id for a in gaf.args}
    for i, arg in enumerate(gaf.args):
        for sub in arg.sub_args:
            if sub not in arg_ids:
                issues.append(
                    ValidationIssue(
                        "error", f"arguments[{i}] ({arg.id})", f"unknown sub-argument {sub!r}"
                    )
                )

    issues.extend(_sub_arg_cycles(gaf))

    for (attacker, target) in sorted(gaf.attacks):
        labels = gaf.attacks[(attacker, target)]
        loc = f"attacks[({attacker}, {target})]"
        for endpoint in (attacker, target):
            if endpoint not in arg_ids:
                issues.append(ValidationIssue("error", loc, f"unknown argument {endpoint!r}"))
        if attacker == target:
            issues.append(ValidationIssue("error", loc, "self-attack"))
        if not labels:
            issues.append(ValidationIssue("error", loc, "empty incompatibility label set"))
        reverse = gaf.attacks.get((target, attacker))
        if reverse is None:
            issues.append(ValidationIssue("warning", loc, "reverse attack not declared"))
        elif reverse != labels:
            issues.append(
                ValidationIssue("warning", loc, "labels differ from the reverse attack's")
            )

    return issues


def _sub_arg_cycles(gaf: GeneralAF) -> list[ValidationIssue]:
    graph = {a.id: [s for s in a.sub_args] for a in gaf.args}
    state: dict[str, int] = {}  # 0 visiting, 1 done
    issues: list[ValidationIssue] = []

    def visit(node: str, trail: list[str]) -> None:
        if state.get(node) == 1:
            return
        if state.get(node) == 0:
            cycle = trail[trail.index(node):] + [node]
            issues.append(
                ValidationIssue(
                    "error",
                    f"arguments ({node})",
                    "cyclic sub-argument relation: " + " -> ".join(cycle),
                )
            )
            return
        state[node] = 0
        for child in graph.get(node, ()):
            if child in graph:
                visit(child, trail + [node])
        state[node] = 1

    for root in sorted(graph):
        if root not in state:
            visit(root, [])
    return issues


def require_valid(gaf: GeneralAF) -> GeneralAF:
    """Return the framework unchanged, or raise with all error-level issues."""
    errors = [i for i in validate(gaf) if i.severity == "error"]
    if errors:
        raise ValidationError(errors)
    return gaf


def args_for_goal(gaf: GeneralAF, goal_id: str) -> frozenset[str]:
    """All instrumental arguments whose claim is the given goal (its plans)."""
    if goal_id not in gaf.goal_map():
        raise InputError(f"unknown goal {goal_id!r}")
    return frozenset(a.id for a in gaf.args if a.claim == goal_id)
