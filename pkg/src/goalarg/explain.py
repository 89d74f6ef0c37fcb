"""Explanatory arguments: from generated beliefs to WHY / WHY_NOT answers.

The flow mirrors the deliberation it explains.  Six fixed rule schemas are
instantiated against the generated beliefs; every ground instance becomes
one explanatory argument (its support is the instance plus its body
beliefs, kept minimal and consistent).  Arguments about the same goal with
opposite claims rebut each other; rebuttals are sharpened into defeats in
favor of arguments grounded in the max-utility outcome, which is what
actually decided the selection.  Each goal then gets its own framework
whose extensions are the explanations.

A complete explanation is the whole per-goal framework; a partial one is
an extension under a configurable semantics (grounded by default, since it
is unique and needs no extension-selection policy).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from . import af_core
from .belief_gen import Belief, BeliefKind, generate_beliefs
from .errors import InputError, QueryDirectionError
from .goal_graph import GoalAF
from .instrumental import IncompatibilityKind, format_kinds
from .selection import SelectionResult


@dataclass(frozen=True)
class Claim:
    """pursued(g) or its negation."""

    goal: str
    pursued: bool

    def negation(self) -> "Claim":
        return Claim(self.goal, not self.pursued)

    def __str__(self) -> str:
        return f"pursued({self.goal})" if self.pursued else f"¬pursued({self.goal})"


@dataclass(frozen=True)
class AtomPattern:
    """One body atom of a schema: belief kind plus positional variables."""

    kind: BeliefKind
    vars: tuple[str, ...]
    binds_labels: bool = False


@dataclass(frozen=True)
class RuleSchema:
    """A rule template.  `decisive` marks the max-utility rules, whose
    arguments defeat (rather than merely rebut) their opponents."""

    id: str
    body: tuple[AtomPattern, ...]
    head_var: str
    head_pursued: bool
    decisive: bool = False


SCHEMAS: tuple[RuleSchema, ...] = (
    RuleSchema("r1", (AtomPattern(BeliefKind.NOT_INCOMP, ("x",)),), "x", True),
    RuleSchema(
        "r2",
        (
            AtomPattern(BeliefKind.INCOMPAT, ("x", "y"), binds_labels=True),
            AtomPattern(BeliefKind.PREF, ("x", "y")),
        ),
        "x",
        True,
    ),
    RuleSchema(
        "r3",
        (
            AtomPattern(BeliefKind.INCOMPAT, ("x", "y"), binds_labels=True),
            AtomPattern(BeliefKind.NOT_PREF, ("y", "x")),
        ),
        "y",
        False,
    ),
    RuleSchema(
        "r4",
        (
            AtomPattern(BeliefKind.INCOMPAT, ("x", "y"), binds_labels=True),
            AtomPattern(BeliefKind.EQ_PREF, ("x", "y")),
        ),
        "x",
        True,
    ),
    RuleSchema("r5", (AtomPattern(BeliefKind.MAX_UTIL, ("x",)),), "x", True, decisive=True),
    RuleSchema("r6", (AtomPattern(BeliefKind.NOT_MAX_UTIL, ("x",)),), "x", False, decisive=True),
)

SCHEMA_BY_ID: Mapping[str, RuleSchema] = {s.id: s for s in SCHEMAS}


@dataclass(frozen=True)
class RuleInstance:
    """A schema applied to concrete goals.  The six schemas only ever bind
    x, y, and a label set, so the substitution is stored flat."""

    schema_id: str
    x: str
    y: str | None
    labels: frozenset[IncompatibilityKind] | None
    body: tuple[Belief, ...]
    head: Claim
    index: int = field(default=0, compare=False)

    @property
    def id(self) -> str:
        return f"r{self.index}"

    @property
    def decisive(self) -> bool:
        return SCHEMA_BY_ID[self.schema_id].decisive

    def substitution(self) -> dict[str, str]:
        subst = {"x": self.x}
        if self.y is not None:
            subst["y"] = self.y
        if self.labels is not None:
            subst["ls"] = format_kinds(self.labels)
        return subst

    def __str__(self) -> str:
        body = " ∧ ".join(str(b) for b in self.body)
        return f"{self.id}: {body} → {self.head}"


def trigger_rules(beliefs: Iterable[Belief]) -> tuple[RuleInstance, ...]:
    """Fire every schema whose body unifies with the belief set.

    Each satisfying substitution yields exactly one instance; numbering is
    by schema order, then by the sorted substitution, so runs are stable.
    """
    pool = tuple(beliefs)
    by_shape: dict[tuple[BeliefKind, tuple[str, ...]], Belief] = {
        (b.kind, b.goals): b for b in pool
    }

    instances: list[RuleInstance] = []
    for schema in SCHEMAS:
        matches: dict[tuple[str, str], RuleInstance] = {}
        first = schema.body[0]
        for belief in pool:
            if belief.kind is not first.kind:
                continue
            subst = dict(zip(first.vars, belief.goals))
            labels = belief.labels if first.binds_labels else None
            body = [belief]
            for atom in schema.body[1:]:
                ground = tuple(subst[v] for v in atom.vars)
                hit = by_shape.get((atom.kind, ground))
                if hit is None:
                    body = []
                    break
                if atom.binds_labels:
                    labels = hit.labels
                body.append(hit)
            if not body:
                continue
            head = Claim(subst[schema.head_var], schema.head_pursued)
            key = (subst["x"], subst.get("y", ""))
            matches[key] = RuleInstance(
                schema.id, subst["x"], subst.get("y"), labels, tuple(body), head
            )
        for key in sorted(matches):
            inst = matches[key]
            instances.append(
                RuleInstance(
                    inst.schema_id, inst.x, inst.y, inst.labels, inst.body,
                    inst.head, index=len(instances) + 1,
                )
            )
    return tuple(instances)


SupportElement = Belief | RuleInstance


def derives(support: frozenset[SupportElement], claim: Claim) -> bool:
    """True iff some rule instance in the support fires entirely inside it
    and concludes the claim."""
    return any(
        isinstance(e, RuleInstance) and e.head == claim and set(e.body) <= support
        for e in support
    )


@dataclass(frozen=True)
class ExplanatoryArgument:
    """One rule instance packaged with its ground body: support plus claim."""

    instance: RuleInstance
    index: int = field(default=0, compare=False)

    @property
    def id(self) -> str:
        return f"A{self.index}"

    @property
    def support(self) -> frozenset[SupportElement]:
        return frozenset((*self.instance.body, self.instance))

    @property
    def claim(self) -> Claim:
        return self.instance.head

    @property
    def schema_id(self) -> str:
        return self.instance.schema_id

    @property
    def decisive(self) -> bool:
        return self.instance.decisive

    def __str__(self) -> str:
        parts = [b.id for b in self.instance.body] + [self.instance.id]
        return f"{self.id} = ⟨{{{', '.join(parts)}}}, {self.claim}⟩"


def construct_arguments(
    beliefs: Iterable[Belief], instances: Iterable[RuleInstance]
) -> tuple[ExplanatoryArgument, ...]:
    """One argument per rule instance, with support checked to be derivable,
    minimal, and consistent."""
    belief_set = set(beliefs)
    out: list[ExplanatoryArgument] = []
    for inst in instances:
        if not set(inst.body) <= belief_set:
            raise InputError(f"instance {inst.id} was not triggered from these beliefs")
        arg = ExplanatoryArgument(inst, index=len(out) + 1)
        _check_support(arg)
        out.append(arg)
    return tuple(out)


def _check_support(arg: ExplanatoryArgument) -> None:
    support = arg.support
    if not derives(support, arg.claim):
        raise InputError(f"{arg.id}: support does not derive its claim")
    if derives(support, arg.claim.negation()):
        raise InputError(f"{arg.id}: inconsistent support")
    for element in support:
        if derives(support - {element}, arg.claim):
            raise InputError(f"{arg.id}: support is not minimal")


def rebuts(a: ExplanatoryArgument, b: ExplanatoryArgument) -> bool:
    """Contradictory claims about the same goal (always mutual)."""
    return a.claim == b.claim.negation()


def defeats(a: ExplanatoryArgument, b: ExplanatoryArgument) -> bool:
    """Directed sharpening of a rebuttal.

    A max-utility argument defeats a non-decisive opponent one-way; between
    two non-decisive (or two decisive) opponents the rebuttal stays mutual,
    so both directions count as defeats.
    """
    return rebuts(a, b) and (a.decisive or not b.decisive)


@dataclass(frozen=True)
class ExplanatoryAF:
    """The per-goal framework: all arguments about one goal plus defeats."""

    goal: str
    arguments: tuple[ExplanatoryArgument, ...]
    defeats: frozenset[tuple[str, str]]

    def to_abstract(self) -> af_core.AbstractAF:
        return af_core.AbstractAF.of((a.id for a in self.arguments), self.defeats)


def build_xaf(goal: str, arguments: Iterable[ExplanatoryArgument]) -> ExplanatoryAF:
    """Collect the goal's arguments and the defeat edges among them."""
    mine = tuple(a for a in arguments if a.claim.goal == goal)
    edges = frozenset(
        (a.id, b.id) for a in mine for b in mine if defeats(a, b)
    )
    return ExplanatoryAF(goal, mine, edges)


class Semantics(Enum):

    GROUNDED = "grounded"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    STABLE = "stable"


def extensions_of(
    xaf: ExplanatoryAF, semantics: Semantics
) -> tuple[tuple[ExplanatoryArgument, ...], ...]:
    """Evaluate the framework; each extension's members come back ordered.

    Grounded yields exactly one extension; the multi-extension semantics
    may yield several (or none, for stable), all of which are returned.
    """
    af = xaf.to_abstract()
    if semantics is Semantics.GROUNDED:
        id_sets = [af_core.grounded_extension(af)]
    elif semantics is Semantics.COMPLETE:
        id_sets = af_core.complete_extensions(af)
    elif semantics is Semantics.PREFERRED:
        id_sets = af_core.preferred_extensions(af)
    else:
        id_sets = af_core.stable_extensions(af)
    by_id = {a.id: a for a in xaf.arguments}
    extensions = [
        tuple(sorted((by_id[i] for i in ids), key=lambda a: a.index))
        for ids in id_sets
    ]
    extensions.sort(key=lambda ext: tuple(a.index for a in ext))
    return tuple(extensions)


class QueryKind(Enum):

    WHY = "why"
    WHY_NOT = "why-not"


class ExplanationKind(Enum):

    PARTIAL = "partial"
    COMPLETE = "complete"


@dataclass(frozen=True)
class Explanation:
    goal: str
    query: QueryKind
    kind: ExplanationKind
    xaf: ExplanatoryAF
    semantics: Semantics | None
    extensions: tuple[tuple[ExplanatoryArgument, ...], ...]


@dataclass(frozen=True)
class ExplanationModel:
    """Everything the query operations need, built once per deliberation."""

    gaf_sc: GoalAF
    selection: SelectionResult
    beliefs: tuple[Belief, ...]
    instances: tuple[RuleInstance, ...]
    arguments: tuple[ExplanatoryArgument, ...]
    xafs: Mapping[str, ExplanatoryAF]


def build_explanation_model(gaf_sc: GoalAF, selection: SelectionResult) -> ExplanationModel:
    """Run the generation steps: beliefs, instances, arguments, one
    framework per goal."""
    beliefs = generate_beliefs(gaf_sc, selection)
    instances = trigger_rules(beliefs)
    arguments = construct_arguments(beliefs, instances)
    xafs = {g: build_xaf(g, arguments) for g in gaf_sc.goals}
    return ExplanationModel(gaf_sc, selection, beliefs, instances, arguments, xafs)


def _explanation(
    model: ExplanationModel,
    goal: str,
    query: QueryKind,
    complete: bool,
    semantics: Semantics,
) -> Explanation:
    xaf = model.xafs[goal]
    if complete:
        return Explanation(goal, query, ExplanationKind.COMPLETE, xaf, None, ())
    return Explanation(
        goal, query, ExplanationKind.PARTIAL, xaf, semantics, extensions_of(xaf, semantics)
    )


def why(
    model: ExplanationModel,
    goal: str,
    complete: bool = False,
    semantics: Semantics = Semantics.GROUNDED,
) -> Explanation:
    """Explain why `goal` became pursued; only answerable for pursued goals."""
    if goal not in model.gaf_sc.goals:
        raise InputError(f"unknown goal {goal!r}")
    if goal not in model.selection.pursued:
        raise QueryDirectionError(
            f"{goal} did not become pursued; ask why-not {goal}", "why-not"
        )
    return _explanation(model, goal, QueryKind.WHY, complete, semantics)


def why_not(
    model: ExplanationModel,
    goal: str,
    complete: bool = False,
    semantics: Semantics = Semantics.GROUNDED,
) -> Explanation:
    """Explain why `goal` did not become pursued; the mirror of `why`."""
    if goal not in model.gaf_sc.goals:
        raise InputError(f"unknown goal {goal!r}")
    if goal in model.selection.pursued:
        raise QueryDirectionError(
            f"{goal} became pursued; ask why {goal}", "why"
        )
    return _explanation(model, goal, QueryKind.WHY_NOT, complete, semantics)


def complete_explanation(model: ExplanationModel, goal: str) -> Explanation:
    """The goal's full explanatory framework, whichever way the query runs."""
    if goal not in model.gaf_sc.goals:
        raise InputError(f"unknown goal {goal!r}")
    query = QueryKind.WHY if goal in model.selection.pursued else QueryKind.WHY_NOT
    return _explanation(model, goal, query, complete=True, semantics=Semantics.GROUNDED)
