"""Datacube, iceberg, range, differential and emerging cubes as convex cubes.

Two-relation cubes are always evaluated over ``(r1, r2)`` in that order, so
in a conjunction ``relation=0`` is the reference data ``r1`` and
``relation=1`` the refreshed data ``r2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .borders import Border, compute_borders, solution_set
from .constraints import Aggregate, Atom, Conjunction, aggregate, relative_aggregate
from .errors import DomainError
from .lattice import DEFAULT_BUDGET, Cell, Relation, Space, canonical, canonical_key

INF = math.inf


@dataclass(frozen=True)
class CubeCell:
    tuple: Cell
    value: Fraction


@dataclass(frozen=True)
class EmergenceEntry:
    tuple: Cell
    rate: Fraction | float  # math.inf for "only in r2"


def datacube_constraint() -> Conjunction:
    return Conjunction([Atom(Aggregate.COUNT, ">=", 1)])


def datacube(r: Relation, f=Aggregate.SUM, budget: int | None = DEFAULT_BUDGET) -> list:
    """Every non-empty cell of the cube of ``r`` with its aggregate."""
    if not r.rows:
        raise DomainError("datacube of an empty relation")
    f = Aggregate.coerce(f)
    cells = solution_set(Space.of(r, budget=budget), datacube_constraint())
    return [CubeCell(t, aggregate(t, r, f)) for t in canonical(cells)]


def datacube_borders(r: Relation, budget: int | None = DEFAULT_BUDGET) -> Border:
    return compute_borders(r, datacube_constraint(), budget)


def iceberg_constraint(f, min_threshold, relative: bool = False) -> Conjunction:
    return Conjunction([Atom(Aggregate.coerce(f), ">=", min_threshold, relative)])


def iceberg_borders(r: Relation, f, min_threshold, relative: bool = False,
                    budget: int | None = DEFAULT_BUDGET) -> Border:
    return compute_borders(r, iceberg_constraint(f, min_threshold, relative), budget)


def range_constraint(f, min_threshold, max_threshold, relative: bool = False) -> Conjunction:
    lo, hi = Fraction(min_threshold), Fraction(max_threshold)
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    f = Aggregate.coerce(f)
    return Conjunction([Atom(f, ">=", lo, relative), Atom(f, "<=", hi, relative)])


def range_borders(r: Relation, f, min_threshold, max_threshold, relative: bool = False,
                  budget: int | None = DEFAULT_BUDGET) -> Border:
    conj = range_constraint(f, min_threshold, max_threshold, relative)
    return compute_borders(r, conj, budget)


def differential_constraint(f, min_threshold, relative: bool = False) -> Conjunction:
    """Frequent enough in r2 and absent from the datacube of r1 (COUNT over r1 < 1)."""
    return Conjunction([
        Atom(Aggregate.coerce(f), ">=", min_threshold, relative, relation=1),
        Atom(Aggregate.COUNT, "<", 1, relation=0),
    ])


def differential_borders(r2: Relation, r1: Relation, f, min_threshold, relative: bool = False,
                         budget: int | None = DEFAULT_BUDGET) -> Border:
    conj = differential_constraint(f, min_threshold, relative)
    return compute_borders((r1, r2), conj, budget)


def _check_share(name, value) -> Fraction:
    value = Fraction(value)
    if not 0 < value < 1:
        raise DomainError(f"{name} must lie in (0, 1), got {value}")
    return value


def emerging_constraint(f, min_share1, min_share2) -> Conjunction:
    """Rare in r1 (strict) and frequent in r2 (non-strict), both relative."""
    f = Aggregate.coerce(f)
    s1 = _check_share("minShare1", min_share1)
    s2 = _check_share("minShare2", min_share2)
    return Conjunction([
        Atom(f, "<", s1, relative=True, relation=0),
        Atom(f, ">=", s2, relative=True, relation=1),
    ])


def emerging_borders(r2: Relation, r1: Relation, f, min_share1, min_share2,
                     budget: int | None = DEFAULT_BUDGET) -> Border:
    conj = emerging_constraint(f, min_share1, min_share2)
    return compute_borders((r1, r2), conj, budget)


def emergence_rate(t: Cell, r1: Relation, r2: Relation, f) -> Fraction | float:
    """Ratio of the relative aggregates in r2 and r1, with 0 and infinity conventions."""
    if r1.dimensions != r2.dimensions:
        raise DomainError("emergence rate needs relations over the same schema")
    share1 = relative_aggregate(t, r1, f)
    share2 = relative_aggregate(t, r2, f)
    if share1 == 0:
        return Fraction(0) if share2 == 0 else INF
    return share2 / share1


def min_ratio(min_share1, min_share2) -> Fraction:
    return Fraction(min_share2) / Fraction(min_share1)


def _rate_key(entry: EmergenceEntry):
    finite = entry.rate != INF
    return (finite, -entry.rate if finite else 0, canonical_key(entry.tuple))


def emergence_report(r2: Relation, r1: Relation, f, min_share1, min_share2,
                     budget: int | None = DEFAULT_BUDGET) -> list:
    """Emerging tuples with their rates, highest rate first."""
    conj = emerging_constraint(f, min_share1, min_share2)
    members = solution_set(Space.of(r1, r2, budget=budget), conj)
    entries = [EmergenceEntry(t, emergence_rate(t, r1, r2, f)) for t in members]
    return sorted(entries, key=_rate_key)
