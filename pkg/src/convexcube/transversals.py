"""Maximal frequent tuples, cube transversals, and emerging borders built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .borders import Border, _as_space, check_antichain, compute_borders
from .constraints import Aggregate, Atom, Conjunction
from .cubes import _check_share
from .errors import DomainError
from .lattice import (
    BOTTOM,
    DEFAULT_BUDGET,
    Cell,
    Relation,
    canonical,
    generalizations,
    generalizes,
    parents,
    tuple_sum,
    tupall,
)


@dataclass(frozen=True)
class MaximalSet:
    tuples: tuple
    source: Relation
    threshold: Fraction
    function: Aggregate

    def __iter__(self):
        return iter(self.tuples)

    def __len__(self):
        return len(self.tuples)


def maximal_frequent(r: Relation, f, threshold, budget: int | None = DEFAULT_BUDGET) -> MaximalSet:
    """Most specific tuples of CL(r) whose relative aggregate reaches ``threshold``."""
    f = Aggregate.coerce(f)
    threshold = Fraction(threshold)
    if not 0 < threshold < 1:
        raise DomainError(f"threshold must lie in (0, 1), got {threshold}")
    conj = Conjunction([Atom(f, ">=", threshold, relative=True)])
    border = compute_borders(r, conj, budget)
    return MaximalSet(border.S, r, threshold, f)


def _downset(T, space) -> set:
    down = set()
    for v in T:
        down.update(generalizations(v, space))
    return down


def ctr(T, space, budget: int | None = DEFAULT_BUDGET) -> tuple:
    """Minimal tuples generalizing no member of the anti-chain ``T``.

    The complement of the down-set of T is up-closed, so a tuple is a minimal
    transversal iff it lies outside the down-set while all its parents lie
    inside.  Candidates are therefore the top and the children of down-set
    members.
    """
    space = _as_space(space, budget)
    T = canonical(T)
    check_antichain(T)
    for v in T:
        space.check(v)
    down = _downset(T, space)
    top = space.top
    if top not in down:
        return (top,)
    found = set()
    for u in down:
        if u is BOTTOM:
            continue
        for child in space.children(u):
            if child not in down and all(p in down for p in parents(child)):
                found.add(child)
    return canonical(found)


def ctr_constrained(T, A, space, budget: int | None = DEFAULT_BUDGET) -> tuple:
    """Minimal tuples generalizing no member of ``T`` but some member of ``A``.

    Minimality is taken inside the A-constrained set.
    """
    space = _as_space(space, budget)
    T, A = canonical(T), canonical(A)
    check_antichain(T)
    check_antichain(A)
    down_t = _downset(T, space)
    down_a = _downset(A, space)
    found = []
    for t in down_a:
        if t is BOTTOM or t in down_t:
            continue
        # parents of t stay inside down_a, so minimal iff every parent is in down_t
        if all(p in down_t for p in parents(t)):
            found.append(t)
    return canonical(found)


def is_sum_transversal(t: Cell, r: Relation) -> bool:
    """The literal sum-formula reading: no row sums with ``t`` to the all-ALL tuple.

    Kept as a diagnostic; it is not the semantics ``ctr`` implements.
    """
    if t is BOTTOM:
        return True
    top = tupall(r.arity)
    return all(tuple_sum(t, labels) != top for labels, _ in r.rows)


def emerging_borders_via_transversals(r2: Relation, r1: Relation, f, min_share1, min_share2,
                                      budget: int | None = DEFAULT_BUDGET) -> Border:
    """Emerging borders as G = ctr(M1, M2) over CL(r1 u r2), S = members of M2 above G."""
    s1 = _check_share("minShare1", min_share1)
    s2 = _check_share("minShare2", min_share2)
    m1 = maximal_frequent(r1, f, s1, budget)
    m2 = maximal_frequent(r2, f, s2, budget)
    G = ctr_constrained(m1.tuples, m2.tuples, (r1, r2), budget)
    S = [t for t in m2.tuples if any(generalizes(g, t) for g in G)]
    return Border(G, S)
