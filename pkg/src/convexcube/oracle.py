"""Brute-force reference evaluation.

Nothing here calls the optimized lattice, aggregate or border code: the
space is enumerated with plain loops, every aggregate is recomputed by
scanning rows, and minima/maxima come from pairwise comparison.  Slow on
purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .borders import Border
from .errors import BudgetExceeded, ConfigurationError, DomainError
from .lattice import ALL, BOTTOM, DEFAULT_BUDGET

_WILD = ALL


@dataclass(frozen=True)
class SolutionSet:
    tuples: frozenset
    provenance: str

    def __len__(self):
        return len(self.tuples)

    def __contains__(self, t):
        return t in self.tuples


def _more_general(u, v) -> bool:
    if v is BOTTOM:
        return True
    if u is BOTTOM:
        return False
    for i in range(len(u)):
        if u[i] != _WILD and u[i] != v[i]:
            return False
    return True


def _rows_under(t, relation):
    out = []
    if t is BOTTOM:
        return out
    for labels, measure in relation.rows:
        covered = True
        for i in range(len(t)):
            if t[i] != _WILD and t[i] != labels[i]:
                covered = False
                break
        if covered:
            out.append(measure)
    return out


def naive_aggregate(t, relation, func: str) -> Fraction:
    measures = _rows_under(t, relation)
    if func == "count":
        return Fraction(len(measures))
    if func == "sum":
        total = Fraction(0)
        for m in measures:
            total += m
        return total
    raise ConfigurationError(f"oracle cannot evaluate {func!r}")


def _atom_value(atom, t, relations) -> Fraction:
    if atom.relation >= len(relations):
        raise ConfigurationError(f"atom {atom} is unbound")
    r = relations[atom.relation]
    func = str(getattr(atom.func, "value", atom.func))
    value = naive_aggregate(t, r, func)
    if atom.relative:
        whole = naive_aggregate(tuple([_WILD] * len(r.dimensions)), r, func)
        if whole == 0:
            raise DomainError("relative aggregate over an empty relation")
        value = value / whole
    return value


def _compare(op, a, b) -> bool:
    if op == ">=":
        return a >= b
    if op == ">":
        return a > b
    if op == "<=":
        return a <= b
    if op == "<":
        return a < b
    raise ConfigurationError(f"unknown comparator {op!r}")


def naive_satisfies(t, conj, relations) -> bool:
    for atom in conj.atoms:
        if not _compare(atom.op, _atom_value(atom, t, relations), atom.threshold):
            return False
    return True


def naive_space(relations, budget: int | None = DEFAULT_BUDGET) -> list:
    """Every tuple of CL(r1 u ... u rk) plus BOTTOM, via itertools.product."""
    n = len(relations[0].dimensions)
    domains = []
    for i in range(n):
        labels = set()
        for r in relations:
            for row, _ in r.rows:
                labels.add(row[i])
        domains.append(sorted(labels) + [_WILD])
    size = 1
    for d in domains:
        size *= len(d)
    if budget is not None and size + 1 > budget:
        raise BudgetExceeded(f"oracle space of {size + 1} cells exceeds budget {budget}")
    return [tuple(t) for t in product(*domains)] + [BOTTOM]


def _normalize(relations):
    if hasattr(relations, "rows"):
        return (relations,)
    return tuple(relations)


def brute_force_solutions(relations, conj, budget: int | None = DEFAULT_BUDGET) -> SolutionSet:
    """Filter the entire space through ``conj`` (a Conjunction or any predicate ``t -> bool``)."""
    relations = _normalize(relations)
    if callable(conj):
        keep = conj
        label = getattr(conj, "__name__", "predicate")
    else:
        def keep(t):
            return naive_satisfies(t, conj, relations)

        label = str(conj)
    found = frozenset(t for t in naive_space(relations, budget) if keep(t))
    return SolutionSet(found, f"{label} over {len(relations)} relation(s)")


def extract_borders(solutions) -> Border:
    pool = list(solutions.tuples if isinstance(solutions, SolutionSet) else solutions)
    lower, upper = [], []
    for t in pool:
        if not any(u != t and _more_general(u, t) for u in pool):
            lower.append(t)
        if not any(u != t and _more_general(t, u) for u in pool):
            upper.append(t)
    return Border(lower, upper)


def is_convex(solutions, space) -> bool:
    """x <= y <= z with x, z inside implies y inside."""
    inside = set(solutions.tuples if isinstance(solutions, SolutionSet) else solutions)
    for y in space:
        if y in inside:
            continue
        below = any(_more_general(x, y) for x in inside)
        above = any(_more_general(y, z) for z in inside)
        if below and above:
            return False
    return True
