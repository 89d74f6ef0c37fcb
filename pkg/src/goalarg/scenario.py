"""Scenario documents and the end-to-end deliberation pipeline.

A scenario is one JSON document: goals with preferences, then either the
instrumental level (`arguments` + labeled `attacks`) or a directly stated
goal-level conflict relation (`goal_attacks`).  Preferences are parsed as
exact fractions ("0.8" means 4/5, never a float), so selection and all
golden outputs are exact.

`run_pipeline` is a deterministic function of the document: derive, filter,
select, generate beliefs, build the explanation model, and evaluate every
per-goal framework under the configured semantics.  The serialized report
deliberately omits wall-clock timing so identical inputs give identical
bytes.
"""

from __future__ import annotations

import json
import time
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .belief_gen import Belief
from .errors import ScenarioError
from .explain import (
    ExplanationModel,
    ExplanatoryArgument,
    RuleInstance,
    Semantics,
    build_explanation_model,
    extensions_of,
)
from .goal_graph import GoalAF, Stage, apply_successful_attacks, derive_goal_af
from .instrumental import (
    GeneralAF,
    GoalDecl,
    IncompatibilityKind,
    InstrumentalArgDecl,
    ValidationIssue,
    format_kinds,
    kinds_from_letters,
    require_valid,
    validate,
)
from .render import format_rational
from .selection import SelectionResult, UtilityVariant, select


@dataclass(frozen=True)
class RunConfig:
    utility: UtilityVariant = UtilityVariant.SUM_ALL
    semantics: Semantics = Semantics.GROUNDED
    tie_break: str = "lexicographic"


@dataclass(frozen=True)
class Scenario:
    """A loaded document: goal declarations plus one of the two conflict
    levels, ready for the pipeline."""

    goals: tuple[GoalDecl, ...]
    general: GeneralAF | None
    goal_af_raw: GoalAF | None
    main_goals: frozenset[str]
    config: RunConfig

    def names(self) -> dict[str, str]:
        return {g.id: g.predicate for g in self.goals}


def _expect(condition: bool, message: str, location: str) -> None:
    if not condition:
        raise ScenarioError(message, location)


def _parse_preference(raw: Any, location: str) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, float, Fraction, str)):
        raise ScenarioError(f"preference must be a number, got {raw!r}", location)
    try:
        # Floats (from documents parsed without parse_float) go through their
        # shortest decimal form, so 0.8 means 4/5 exactly.
        value = Fraction(str(raw) if isinstance(raw, float) else raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"not a valid rational: {raw!r}", location) from exc
    _expect(0 < value <= 1, f"preference {value} outside (0, 1]", location)
    return value


def _parse_goals(doc: Mapping[str, Any]) -> tuple[GoalDecl, ...]:
    raw = doc.get("goals")
    _expect(isinstance(raw, list) and raw, "'goals' must be a nonempty list", "goals")
    out: list[GoalDecl] = []
    seen: set[str] = set()
    for i, entry in enumerate(raw):
        loc = f"goals[{i}]"
        _expect(isinstance(entry, dict), "must be an object", loc)
        for key in ("id", "predicate", "preference"):
            _expect(key in entry, f"missing key '{key}'", loc)
        gid, predicate = entry["id"], entry["predicate"]
        _expect(isinstance(gid, str) and gid, "'id' must be a nonempty string", f"{loc}.id")
        _expect(gid not in seen, f"duplicate goal id {gid!r}", f"{loc}.id")
        seen.add(gid)
        _expect(
            isinstance(predicate, str) and bool(predicate),
            "'predicate' must be a nonempty string",
            f"{loc}.predicate",
        )
        out.append(GoalDecl(gid, predicate, _parse_preference(entry["preference"], f"{loc}.preference")))
    return tuple(out)


def _parse_kinds(raw: Any, location: str) -> frozenset[IncompatibilityKind]:
    _expect(isinstance(raw, list) and raw, "'kinds' must be a nonempty list", location)
    letters = set()
    for letter in raw:
        _expect(letter in ("t", "r", "s"), f"unknown incompatibility kind {letter!r}", location)
        letters.add(letter)
    return kinds_from_letters(letters)


def _parse_attack_entries(
    raw: Any, key: str
) -> dict[tuple[str, str], frozenset[IncompatibilityKind]]:
    _expect(isinstance(raw, list), f"'{key}' must be a list", key)
    attacks: dict[tuple[str, str], frozenset[IncompatibilityKind]] = {}
    for i, entry in enumerate(raw):
        loc = f"{key}[{i}]"
        _expect(isinstance(entry, dict), "must be an object", loc)
        for field_name in ("from", "to", "kinds"):
            _expect(field_name in entry, f"missing key '{field_name}'", loc)
        source, target = entry["from"], entry["to"]
        _expect(isinstance(source, str) and isinstance(target, str), "'from'/'to' must be strings", loc)
        pair = (source, target)
        kinds = _parse_kinds(entry["kinds"], f"{loc}.kinds")
        if pair in attacks and attacks[pair] != kinds:
            raise ScenarioError(f"pair ({source}, {target}) declared twice with different kinds", loc)
        attacks[pair] = kinds
    return attacks


def _parse_arguments(doc: Mapping[str, Any]) -> tuple[InstrumentalArgDecl, ...]:
    raw = doc.get("arguments")
    _expect(isinstance(raw, list), "'arguments' must be a list", "arguments")
    out: list[InstrumentalArgDecl] = []
    for i, entry in enumerate(raw):
        loc = f"arguments[{i}]"
        _expect(isinstance(entry, dict), "must be an object", loc)
        for key in ("id", "claim"):
            _expect(key in entry, f"missing key '{key}'", loc)
        _expect(
            isinstance(entry["id"], str) and isinstance(entry["claim"], str),
            "'id' and 'claim' must be strings",
            loc,
        )
        sub = entry.get("sub_args", [])
        _expect(isinstance(sub, list), "'sub_args' must be a list", f"{loc}.sub_args")
        out.append(InstrumentalArgDecl(entry["id"], entry["claim"], tuple(sub)))
    return tuple(out)


def _direct_goal_af(
    goals: tuple[GoalDecl, ...],
    entries: dict[tuple[str, str], frozenset[IncompatibilityKind]],
) -> GoalAF:
    goal_ids = {g.id for g in goals}
    attacks: set[tuple[str, str]] = set()
    incomp: dict[tuple[str, str], frozenset[IncompatibilityKind]] = {}
    for (a, b), kinds in sorted(entries.items()):
        loc = f"goal_attacks[({a}, {b})]"
        _expect(a in goal_ids, f"unknown goal {a!r}", loc)
        _expect(b in goal_ids, f"unknown goal {b!r}", loc)
        _expect(a != b, "a goal cannot conflict with itself", loc)
        reverse = entries.get((b, a))
        if reverse is not None and reverse != kinds:
            raise ScenarioError(
                f"kinds for ({a}, {b}) disagree with the reverse direction", loc
            )
        for pair in ((a, b), (b, a)):
            attacks.add(pair)
            incomp[pair] = kinds
    pref = {g.id: g.preference for g in goals}
    return GoalAF(tuple(sorted(goal_ids)), frozenset(attacks), incomp, pref, Stage.RAW)


def _parse_config(doc: Mapping[str, Any]) -> RunConfig:
    raw = doc.get("config", {})
    _expect(isinstance(raw, dict), "'config' must be an object", "config")
    config = RunConfig()
    if "utility" in raw:
        try:
            config = RunConfig(
                UtilityVariant(raw["utility"]), config.semantics, config.tie_break
            )
        except ValueError:
            raise ScenarioError(f"unknown utility variant {raw['utility']!r}", "config.utility")
    if "semantics" in raw:
        try:
            config = RunConfig(config.utility, Semantics(raw["semantics"]), config.tie_break)
        except ValueError:
            raise ScenarioError(f"unknown semantics {raw['semantics']!r}", "config.semantics")
    if "tie_break" in raw:
        _expect(
            raw["tie_break"] == "lexicographic",
            f"unknown tie-break policy {raw['tie_break']!r}",
            "config.tie_break",
        )
    unknown = sorted(set(raw) - {"utility", "semantics", "tie_break"})
    _expect(not unknown, f"unknown config keys: {', '.join(unknown)}", "config")
    return config


def parse_scenario(doc: Any) -> Scenario:
    """Build a scenario from an already-parsed document."""
    _expect(isinstance(doc, dict), "scenario document must be a JSON object", "$")
    goals = _parse_goals(doc)
    goal_ids = {g.id for g in goals}

    has_general = "attacks" in doc
    has_direct = "goal_attacks" in doc
    _expect(
        has_general != has_direct,
        "exactly one of 'attacks' (with 'arguments') or 'goal_attacks' is required",
        "$",
    )

    general: GeneralAF | None = None
    direct: GoalAF | None = None
    if has_general:
        _expect("arguments" in doc, "'attacks' requires 'arguments'", "$")
        args = _parse_arguments(doc)
        general = GeneralAF(goals, args, _parse_attack_entries(doc["attacks"], "attacks"))
    else:
        _expect("arguments" not in doc, "'arguments' only makes sense with 'attacks'", "$")
        direct = _direct_goal_af(goals, _parse_attack_entries(doc["goal_attacks"], "goal_attacks"))

    main_raw = doc.get("main_goals")
    if main_raw is None:
        main = _default_main_goals(goals, general)
    else:
        _expect(isinstance(main_raw, list), "'main_goals' must be a list", "main_goals")
        for g in main_raw:
            _expect(g in goal_ids, f"unknown goal {g!r}", "main_goals")
        main = frozenset(main_raw)

    known = {"goals", "arguments", "attacks", "goal_attacks", "main_goals", "config"}
    unknown = sorted(set(doc) - known)
    _expect(not unknown, f"unknown keys: {', '.join(unknown)}", "$")

    return Scenario(goals, general, direct, main, _parse_config(doc))


def _default_main_goals(
    goals: tuple[GoalDecl, ...], general: GeneralAF | None
) -> frozenset[str]:
    """A goal is main unless one of its plans appears as a sub-argument."""
    if general is None:
        return frozenset(g.id for g in goals)
    arg_claims = {a.id: a.claim for a in general.args}
    sub_claims = {
        arg_claims[sub]
        for a in general.args
        for sub in a.sub_args
        if sub in arg_claims
    }
    return frozenset(g.id for g in goals if g.id not in sub_claims)


def load_scenario(path: str | Path) -> Scenario:
    """Read and parse a scenario file; all numbers come in as fractions."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario: {exc}", str(path)) from exc
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}"
        ) from exc
    return parse_scenario(doc)


def validate_scenario(scenario: Scenario) -> list[ValidationIssue]:
    """Framework-level validation; direct-path scenarios were fully checked
    at load time."""
    if scenario.general is not None:
        return validate(scenario.general)
    return []


@dataclass(frozen=True)
class RunReport:
    """Everything one deliberation produced, stage by stage."""

    config: RunConfig
    goals: tuple[GoalDecl, ...]
    main_goals: frozenset[str]
    goal_af_raw: GoalAF
    gaf_sc: GoalAF
    selection: SelectionResult
    model: ExplanationModel
    extensions: Mapping[str, tuple[tuple[ExplanatoryArgument, ...], ...]]
    elapsed_seconds: float


def run_pipeline(
    scenario: Scenario,
    utility: UtilityVariant | None = None,
    semantics: Semantics | None = None,
) -> RunReport:
    """Run every stage on a scenario; keyword overrides beat file config."""
    started = time.perf_counter()
    config = RunConfig(
        utility or scenario.config.utility,
        semantics or scenario.config.semantics,
        scenario.config.tie_break,
    )
    if scenario.general is not None:
        raw = derive_goal_af(require_valid(scenario.general))
    else:
        assert scenario.goal_af_raw is not None
        raw = scenario.goal_af_raw
    gaf_sc = apply_successful_attacks(raw)
    selection = select(gaf_sc, config.utility, scenario.main_goals)
    model = build_explanation_model(gaf_sc, selection)
    extensions = {
        g: extensions_of(model.xafs[g], config.semantics) for g in gaf_sc.goals
    }
    return RunReport(
        config,
        scenario.goals,
        scenario.main_goals,
        raw,
        gaf_sc,
        selection,
        model,
        extensions,
        time.perf_counter() - started,
    )


def _kinds_list(kinds: frozenset[IncompatibilityKind]) -> list[str]:
    return format_kinds(kinds).split(",") if kinds else []


def _attack_dicts(goal_af: GoalAF) -> list[dict[str, Any]]:
    return [
        {"from": a, "to": b, "kinds": _kinds_list(goal_af.incomp[(a, b)])}
        for (a, b) in sorted(goal_af.attacks)
    ]


def belief_to_dict(belief: Belief) -> dict[str, Any]:
    entry: dict[str, Any] = {
        "id": belief.id,
        "kind": belief.kind.value,
        "goals": list(belief.goals),
        "text": str(belief),
        "provenance": belief.provenance,
    }
    if belief.labels is not None:
        entry["kinds"] = _kinds_list(belief.labels)
    return entry


def instance_to_dict(inst: RuleInstance) -> dict[str, Any]:
    return {
        "id": inst.id,
        "schema": inst.schema_id,
        "substitution": inst.substitution(),
        "body": [b.id for b in inst.body],
        "claim": claim_to_dict(inst.head),
        "text": str(inst),
    }


def claim_to_dict(claim) -> dict[str, Any]:
    return {"goal": claim.goal, "pursued": claim.pursued, "text": str(claim)}


def argument_to_dict(arg: ExplanatoryArgument) -> dict[str, Any]:
    return {
        "id": arg.id,
        "schema": arg.schema_id,
        "support": [b.id for b in arg.instance.body] + [arg.instance.id],
        "claim": claim_to_dict(arg.claim),
        "text": str(arg),
    }


def report_to_dict(report: RunReport) -> dict[str, Any]:
    """A JSON-ready view of the report.  Timing is left out on purpose:
    identical scenarios must serialize to identical bytes."""
    selection = report.selection
    xaf_section: dict[str, Any] = {}
    for g in report.gaf_sc.goals:
        xaf = report.model.xafs[g]
        xaf_section[g] = {
            "arguments": [a.id for a in xaf.arguments],
            "defeats": [list(edge) for edge in sorted(xaf.defeats)],
            "extensions": [
                [a.id for a in ext] for ext in report.extensions[g]
            ],
        }
    return {
        "config": {
            "utility": report.config.utility.value,
            "semantics": report.config.semantics.value,
            "tie_break": report.config.tie_break,
        },
        "goals": [
            {
                "id": g.id,
                "predicate": g.predicate,
                "preference": format_rational(g.preference),
                "main": g.id in report.main_goals,
            }
            for g in report.goals
        ],
        "goal_af": {
            "raw_attacks": _attack_dicts(report.goal_af_raw),
            "successful_attacks": _attack_dicts(report.gaf_sc),
        },
        "selection": {
            "pursued": sorted(selection.pursued),
            "utility": format_rational(selection.winning_utility),
            "conflict_free_count": selection.cf_count,
            "max_extensions": [sorted(s) for s in selection.all_max_extensions],
        },
        "beliefs": [belief_to_dict(b) for b in report.model.beliefs],
        "rule_instances": [instance_to_dict(i) for i in report.model.instances],
        "arguments": [argument_to_dict(a) for a in report.model.arguments],
        "explanatory_frameworks": xaf_section,
    }
