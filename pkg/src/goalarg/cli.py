"""Command-line front end: load a scenario, run the pipeline, print results.

One scenario file in, results on stdout; the pipeline is a deterministic
function of its input, so there is no state beyond the files.  Exit status
is 0 on success and 1 on any validation or query error, with a diagnostic
on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Mapping
from typing import Any

from . import explain as explain_mod
from .af_core import AbstractAF
from .errors import GoalArgError, InputError
from .explain import Explanation, ExplanationKind, Semantics
from .render import export_dot, format_rational, render_partial_explanation
from .scenario import (
    RunReport,
    argument_to_dict,
    belief_to_dict,
    load_scenario,
    report_to_dict,
    run_pipeline,
    validate_scenario,
)
from .selection import UtilityVariant


def _goal_set(goals) -> str:
    return "{" + ", ".join(sorted(goals)) + "}"


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    issues = validate_scenario(scenario)
    for issue in issues:
        stream = sys.stderr if issue.severity == "error" else sys.stdout
        print(str(issue), file=stream)
    errors = [i for i in issues if i.severity == "error"]
    if errors:
        print(f"invalid: {len(errors)} error(s)", file=sys.stderr)
        return 1
    print("ok")
    return 0


def _cmd_select(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    report = run_pipeline(scenario, utility=_utility_flag(args))
    sel = report.selection
    if args.format == "json":
        payload = {
            "pursued": sorted(sel.pursued),
            "utility": format_rational(sel.winning_utility),
            "conflict_free_count": sel.cf_count,
            "max_extensions": [sorted(s) for s in sel.all_max_extensions],
        }
        print(_dump(payload))
        return 0
    print(f"pursued: {_goal_set(sel.pursued)}")
    print(f"utility: {format_rational(sel.winning_utility)}")
    print(f"conflict-free sets: {sel.cf_count}")
    if len(sel.all_max_extensions) > 1:
        print(f"ties: {len(sel.all_max_extensions)} extensions reach the maximum")
    if args.all_extensions:
        print("maximal extensions:")
        for ext in sel.all_max_extensions:
            print(f"  {_goal_set(ext)}")
    return 0


def _cmd_beliefs(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    report = run_pipeline(scenario)
    if args.format == "json":
        print(_dump([belief_to_dict(b) for b in report.model.beliefs]))
        return 0
    for belief in report.model.beliefs:
        print(f"{belief.id}: {belief}  [{belief.provenance}]")
    return 0


def _query(report: RunReport, direction: str, goal: str, complete: bool,
           semantics: Semantics) -> Explanation:
    if direction == "why":
        return explain_mod.why(report.model, goal, complete, semantics)
    return explain_mod.why_not(report.model, goal, complete, semantics)


def _explanation_payload(
    explanation: Explanation, names: Mapping[str, str]
) -> dict[str, Any]:
    xaf = explanation.xaf
    payload: dict[str, Any] = {
        "goal": explanation.goal,
        "query": explanation.query.value,
        "kind": explanation.kind.value,
        "arguments": [argument_to_dict(a) for a in xaf.arguments],
        "defeats": [list(edge) for edge in sorted(xaf.defeats)],
    }
    if explanation.kind is ExplanationKind.PARTIAL:
        payload["semantics"] = explanation.semantics.value if explanation.semantics else None
        payload["extensions"] = [[a.id for a in ext] for ext in explanation.extensions]
        payload["sentences"] = [
            {"argument": s.argument_id, "scheme": s.scheme_id, "text": s.text}
            for s in render_partial_explanation(explanation, names)
        ]
    return payload


def _cmd_explain(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    semantics = Semantics(args.semantics) if args.semantics else None
    report = run_pipeline(scenario, semantics=semantics)
    explanation = _query(
        report, args.direction, args.goal, args.complete, report.config.semantics
    )
    names = scenario.names()
    if args.format == "dot":
        sys.stdout.write(export_dot(explanation.xaf))
        return 0
    if args.format == "structured":
        print(_dump(_explanation_payload(explanation, names)))
        return 0
    sentences = render_partial_explanation(explanation, names)  # errors on complete
    multiple = len(explanation.extensions) > 1
    position = 0
    for i, extension in enumerate(explanation.extensions, start=1):
        if multiple:
            print(f"extension {i}:")
        for _ in extension:
            prefix = "  " if multiple else ""
            print(f"{prefix}{sentences[position].text}")
            position += 1
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    report = run_pipeline(scenario, utility=_utility_flag(args))
    print(_dump(report_to_dict(report)))
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    report = run_pipeline(scenario)
    stage = args.dot
    if stage == "general":
        if scenario.general is None:
            raise InputError("scenario has no instrumental level to export")
        general = scenario.general
        af = AbstractAF.of((a.id for a in general.args), general.attacks.keys())
        sys.stdout.write(export_dot(af))
        return 0
    names = scenario.names()
    if stage == "goals-raw":
        sys.stdout.write(export_dot(report.goal_af_raw, names))
        return 0
    if stage == "goals":
        sys.stdout.write(export_dot(report.gaf_sc, names))
        return 0
    if not args.goal:
        raise InputError("exporting an explanatory framework needs --goal")
    if args.goal not in report.model.xafs:
        raise InputError(f"unknown goal {args.goal!r}")
    sys.stdout.write(export_dot(report.model.xafs[args.goal]))
    return 0


def _utility_flag(args: argparse.Namespace) -> UtilityVariant | None:
    raw = getattr(args, "utility", None)
    return UtilityVariant(raw) if raw else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goalarg",
        description="Argumentation-based goal selection with WHY / WHY_NOT explanations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a scenario file")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("select", help="compute the pursued goals")
    p.add_argument("scenario")
    p.add_argument("--utility", choices=[v.value for v in UtilityVariant])
    p.add_argument("--all-extensions", action="store_true",
                   help="also list every maximal-utility extension")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_select)

    p = sub.add_parser("beliefs", help="dump the generated belief set")
    p.add_argument("scenario")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_beliefs)

    p = sub.add_parser("explain", help="answer a WHY / WHY_NOT query")
    p.add_argument("direction", choices=["why", "why-not"])
    p.add_argument("goal")
    p.add_argument("scenario")
    p.add_argument("--complete", action="store_true",
                   help="return the full explanatory framework instead of an extension")
    p.add_argument("--semantics", choices=[s.value for s in Semantics])
    p.add_argument("--format", choices=["text", "structured", "dot"], default="text")
    p.set_defaults(func=_cmd_explain)

    p = sub.add_parser("report", help="print the full run report as JSON")
    p.add_argument("scenario")
    p.add_argument("--utility", choices=[v.value for v in UtilityVariant])
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("export", help="emit a framework as DOT text")
    p.add_argument("scenario")
    p.add_argument("--dot", required=True,
                   choices=["general", "goals-raw", "goals", "xaf"],
                   help="which pipeline stage to export")
    p.add_argument("--goal", help="goal id, required for --dot xaf")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GoalArgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
