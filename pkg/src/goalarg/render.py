"""Rendering: pseudo-natural sentences, DOT graphs, value formatting.

Each rule schema has one sentence template; which template applies to an
argument is decided by the rule its instance came from.  Templates are
plain data, so adding schemes later needs no engine change.  Only partial
explanations render as sentences; complete explanations are graphs and go
out as DOT or structured documents.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .af_core import AbstractAF
from .errors import InputError
from .explain import Explanation, ExplanationKind, ExplanatoryAF, ExplanatoryArgument
from .goal_graph import GoalAF
from .instrumental import format_kinds


SENTENCE_TEMPLATES: Mapping[str, str] = {
    "r1": "{x} has no incompatibility, so it became pursued.",
    "r2": (
        "{x} and {y} have the following conflicts: '{ls}'. "
        "Since {x} is more preferable than {y}, {x} became pursued."
    ),
    "r3": (
        "{x} and {y} have the following conflicts: '{ls}'. "
        "Since {y} is less preferable than {x}, {y} did not become pursued."
    ),
    "r4": (
        "{x} and {y} have the following conflicts: '{ls}'. "
        "Since {x} and {y} have the same preference value, {x} became pursued."
    ),
    "r5": "Since {x} belonged to the set of goals that maximizes the utility, it became pursued.",
    "r6": (
        "Since {x} did not belong to the set of goals that maximizes the utility, "
        "it did not become pursued."
    ),
}


@dataclass(frozen=True)
class ExplanatorySentence:
    argument_id: str
    scheme_id: str
    text: str


def render_argument(
    arg: ExplanatoryArgument, names: Mapping[str, str]
) -> ExplanatorySentence:
    """Apply the scheme matching the argument's rule.

    `names` resolves goal ids to their display predicates, verbatim; label
    sets render as their letters in fixed t, r, s order.
    """
    inst = arg.instance
    slots: dict[str, str] = {}
    for var, goal in (("x", inst.x), ("y", inst.y)):
        if goal is None:
            continue
        if goal not in names:
            raise InputError(f"no predicate known for goal {goal!r}")
        slots[var] = names[goal]
    if inst.labels is not None:
        slots["ls"] = format_kinds(inst.labels)
    text = SENTENCE_TEMPLATES[inst.schema_id].format(**slots)
    return ExplanatorySentence(arg.id, inst.schema_id, text)


def render_partial_explanation(
    explanation: Explanation, names: Mapping[str, str]
) -> list[ExplanatorySentence]:
    """One sentence per extension member, in argument order.

    When a multi-extension semantics produced several extensions their
    sentence groups are concatenated in extension order.
    """
    if explanation.kind is not ExplanationKind.PARTIAL:
        raise InputError(
            "complete explanations have no sentence form; export them as a graph "
            "(DOT) or as a structured document"
        )
    return [
        render_argument(arg, names)
        for extension in explanation.extensions
        for arg in extension
    ]


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(
    af: AbstractAF | GoalAF | ExplanatoryAF, names: Mapping[str, str] | None = None
) -> str:
    """Deterministic DOT text for any of the three framework shapes.

    Goal graphs carry their conflict kinds as edge labels; explanatory
    frameworks label each node with its claim.
    """
    lines = ["digraph {"]
    if isinstance(af, GoalAF):
        for g in af.goals:
            label = f"{g}: {names[g]}" if names and g in names else g
            lines.append(f'  "{_dot_escape(g)}" [label="{_dot_escape(label)}"];')
        for (a, b) in sorted(af.attacks):
            kinds = format_kinds(af.incomp[(a, b)])
            lines.append(
                f'  "{_dot_escape(a)}" -> "{_dot_escape(b)}" [label="{_dot_escape(kinds)}"];'
            )
    elif isinstance(af, ExplanatoryAF):
        for arg in af.arguments:
            label = f"{arg.id}: {arg.claim}"
            lines.append(f'  "{_dot_escape(arg.id)}" [label="{_dot_escape(label)}"];')
        for (a, b) in sorted(af.defeats):
            lines.append(f'  "{_dot_escape(a)}" -> "{_dot_escape(b)}";')
    else:
        for node in af.nodes:
            lines.append(f'  "{_dot_escape(node)}";')
        for (a, b) in sorted(af.attacks):
            lines.append(f'  "{_dot_escape(a)}" -> "{_dot_escape(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_rational(value: Fraction) -> str:
    """Exact decimal when the value terminates, else "numerator/denominator"."""
    num, den = value.numerator, value.denominator
    rest = den
    twos = fives = 0
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return f"{num}/{den}"
    digits = max(twos, fives)
    if digits == 0:
        return str(num)
    scaled = abs(num) * 10**digits // den
    whole, frac = divmod(scaled, 10**digits)
    sign = "-" if num < 0 else ""
    return f"{sign}{whole}.{str(frac).zfill(digits)}"
