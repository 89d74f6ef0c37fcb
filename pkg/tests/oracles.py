"""Brute-force oracles, written straight from the definitions.

Everything here enumerates all subsets and applies the defining condition
verbatim, independent of the library's pruned enumeration, so it can serve
as ground truth for frameworks up to ~15 nodes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import chain, combinations


def powerset(nodes):
    items = sorted(nodes)
    return [
        frozenset(c) for c in chain.from_iterable(
            combinations(items, r) for r in range(len(items) + 1)
        )
    ]


def is_conflict_free(s, attacks):
    return not any((a, b) in attacks for a in s for b in s)


def defends(nodes, attacks, s, a):
    attackers = {x for (x, t) in attacks if t == a}
    return all(any((y, x) in attacks for y in s) for x in attackers)


def conflict_free_brute(nodes, attacks):
    return {s for s in powerset(nodes) if is_conflict_free(s, attacks)}


def admissible_brute(nodes, attacks):
    return {
        s for s in conflict_free_brute(nodes, attacks)
        if all(defends(nodes, attacks, s, a) for a in s)
    }


def complete_brute(nodes, attacks):
    return {
        s for s in conflict_free_brute(nodes, attacks)
        if s == frozenset(a for a in nodes if defends(nodes, attacks, s, a))
    }


def grounded_brute(nodes, attacks):
    complete = complete_brute(nodes, attacks)
    least = [s for s in complete if all(s <= other for other in complete)]
    assert len(least) == 1, "grounded extension must be the unique least complete"
    return least[0]


def preferred_brute(nodes, attacks):
    complete = complete_brute(nodes, attacks)
    return {s for s in complete if not any(s < other for other in complete)}


def stable_brute(nodes, attacks):
    out = set()
    for s in conflict_free_brute(nodes, attacks):
        attacked = {t for (a, t) in attacks if a in s}
        if all(n in attacked for n in nodes if n not in s):
            out.add(s)
    return out


def all_semantics_brute(nodes, attacks):
    """Every semantics for one framework, sharing the subset enumeration."""
    conflict_free = conflict_free_brute(nodes, attacks)
    admissible = {
        s for s in conflict_free if all(defends(nodes, attacks, s, a) for a in s)
    }
    complete = {
        s for s in conflict_free
        if s == frozenset(a for a in nodes if defends(nodes, attacks, s, a))
    }
    least = [s for s in complete if all(s <= other for other in complete)]
    assert len(least) == 1
    preferred = {s for s in complete if not any(s < other for other in complete)}
    stable = set()
    for s in conflict_free:
        attacked = {t for (a, t) in attacks if a in s}
        if all(n in attacked for n in nodes if n not in s):
            stable.add(s)
    return {
        "conflict_free": conflict_free,
        "admissible": admissible,
        "complete": complete,
        "grounded": least[0],
        "preferred": preferred,
        "stable": stable,
    }


def max_utility_brute(goals, conflicts, weights):
    """All maximum-weight conflict-free goal sets, plus count and maximum.

    `conflicts` may be directed; a pair in either direction keeps the two
    goals apart.
    """
    sym = set(conflicts) | {(b, a) for (a, b) in conflicts}
    candidates = [s for s in powerset(goals) if is_conflict_free(s, sym)]
    best = max(
        (sum((weights[g] for g in s), start=Fraction(0)) for s in candidates),
        default=Fraction(0),
    )
    maxima = {
        s for s in candidates
        if sum((weights[g] for g in s), start=Fraction(0)) == best
    }
    return maxima, best, len(candidates)
