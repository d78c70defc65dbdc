"""The cube lattice: tuples, relations, generalization order, Sum and Product.

A regular tuple is a plain Python ``tuple`` of labels, one per dimension,
where the string ``ALL`` stands for the aggregated value.  The empty tuple
that closes the lattice from below (every tuple generalizes it) is the
singleton :data:`BOTTOM`.

Orientation matters throughout the package: ``generalizes(u, v)`` means
``u`` is *more general* than ``v``, so the "minimal" elements of a set are
its most general tuples and the "maximal" ones its most specific.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import prod
from typing import Iterable, Iterator, Sequence, Union

from .errors import ArityError, BudgetExceeded, DataError, DomainError

ALL = "ALL"
DEFAULT_BUDGET = 10**6


class _Bottom:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()

Cell = Union[tuple, _Bottom]


def is_bottom(t) -> bool:
    return t is BOTTOM


@dataclass(frozen=True)
class Schema:
    dimensions: tuple
    measure: str

    def __post_init__(self):
        dims = tuple(self.dimensions)
        object.__setattr__(self, "dimensions", dims)
        if not dims:
            raise DataError("a schema needs at least one dimension")
        if any(not d for d in dims):
            raise DataError("dimension names must be nonempty")
        if len(set(dims)) != len(dims):
            raise DataError(f"duplicate dimension names in {dims}")

    @property
    def arity(self) -> int:
        return len(self.dimensions)


@dataclass(frozen=True)
class Relation:
    """A bag of rows ``(labels, measure)`` over a schema.

    Measures are exact rationals and must be strictly positive; duplicate
    label combinations are kept.
    """

    schema: Schema
    rows: tuple = field(default=())

    def __post_init__(self):
        rows = []
        n = self.schema.arity
        for labels, measure in self.rows:
            labels = tuple(labels)
            if len(labels) != n:
                raise DataError(f"row {labels} has {len(labels)} labels, schema has {n}")
            for label in labels:
                if label == ALL:
                    raise DataError(f"label {ALL!r} is reserved and cannot appear in data")
            measure = Fraction(measure)
            if measure <= 0:
                raise DataError(f"measure must be strictly positive, got {measure} in row {labels}")
            rows.append((labels, measure))
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_rows(cls, dimensions, measure, rows) -> "Relation":
        return cls(Schema(tuple(dimensions), measure), tuple(rows))

    @property
    def dimensions(self) -> tuple:
        return self.schema.dimensions

    @property
    def arity(self) -> int:
        return self.schema.arity

    def __len__(self):
        return len(self.rows)

    def domains(self) -> tuple:
        """Active domain of each dimension, sorted."""
        return tuple(
            tuple(sorted({labels[i] for labels, _ in self.rows})) for i in range(self.arity)
        )


def tupall(arity: int) -> tuple:
    return (ALL,) * arity


def _check_arity(u, v):
    if len(u) != len(v):
        raise ArityError(f"arity mismatch: {len(u)} vs {len(v)}")


def generalizes(u: Cell, v: Cell) -> bool:
    """True iff ``u`` is at least as general as ``v``."""
    if v is BOTTOM:
        return True
    if u is BOTTOM:
        return False
    _check_arity(u, v)
    return all(a == ALL or a == b for a, b in zip(u, v))


def tuple_sum(u: Cell, v: Cell) -> Cell:
    """Most specific tuple generalizing both operands."""
    if u is BOTTOM:
        return v
    if v is BOTTOM:
        return u
    _check_arity(u, v)
    return tuple(a if a == b else ALL for a, b in zip(u, v))


def tuple_product(u: Cell, v: Cell) -> Cell:
    """Most general tuple specializing both operands (BOTTOM on conflict)."""
    if u is BOTTOM or v is BOTTOM:
        return BOTTOM
    _check_arity(u, v)
    out = []
    for a, b in zip(u, v):
        if a == ALL:
            out.append(b)
        elif b == ALL or a == b:
            out.append(a)
        else:
            return BOTTOM
    return tuple(out)


def meet(tuples: Iterable[Cell]) -> Cell:
    tuples = list(tuples)
    if not tuples:
        raise DomainError("meet of an empty set is undefined")
    return reduce(tuple_sum, tuples)


def join(tuples: Iterable[Cell]) -> Cell:
    tuples = list(tuples)
    if not tuples:
        raise DomainError("join of an empty set is undefined")
    return reduce(tuple_product, tuples)


def level(t: Cell) -> int:
    """Number of non-ALL coordinates; BOTTOM sits above every regular level."""
    if t is BOTTOM:
        raise DomainError("BOTTOM has no level")
    return sum(1 for a in t if a != ALL)


def parents(t: tuple) -> Iterator[tuple]:
    """Immediate generalizations: one concrete coordinate rolled up to ALL."""
    for i, a in enumerate(t):
        if a != ALL:
            yield t[:i] + (ALL,) + t[i + 1:]


def canonical_key(t: Cell):
    """Sort key: schema order, labels lexicographic, ALL last, BOTTOM last of all."""
    if t is BOTTOM:
        return (1, ())
    return (0, tuple((a == ALL, a) for a in t))


def canonical(tuples: Iterable[Cell]) -> tuple:
    return tuple(sorted(set(tuples), key=canonical_key))


def space_size(domains: Sequence[Sequence[str]]) -> int:
    return prod(len(d) + 1 for d in domains) + 1


@dataclass(frozen=True)
class Space:
    """Space(r) for one relation, or CL(r1 u r2) for several sharing a schema."""

    relations: tuple
    domains: tuple

    @classmethod
    def of(cls, *relations: Relation, budget: int | None = DEFAULT_BUDGET) -> "Space":
        if len(relations) == 1 and isinstance(relations[0], (list, tuple)):
            relations = tuple(relations[0])
        if not relations:
            raise DomainError("a space needs at least one relation")
        dims = relations[0].dimensions
        for r in relations[1:]:
            if r.dimensions != dims:
                raise ArityError(f"schema mismatch: {r.dimensions} vs {dims}")
        domains = tuple(
            tuple(sorted(set().union(*(r.domains()[i] for r in relations))))
            for i in range(len(dims))
        )
        space = cls(tuple(relations), domains)
        if budget is not None and space.size > budget:
            raise BudgetExceeded(f"space has {space.size} cells, budget is {budget}")
        return space

    @property
    def dimensions(self) -> tuple:
        return self.relations[0].dimensions

    @property
    def arity(self) -> int:
        return len(self.domains)

    @property
    def size(self) -> int:
        return space_size(self.domains)

    @property
    def top(self) -> tuple:
        return tupall(self.arity)

    def check(self, t: Cell) -> None:
        if t is not BOTTOM and len(t) != self.arity:
            raise ArityError(f"tuple {t} has arity {len(t)}, space has {self.arity}")

    def children(self, t: tuple) -> Iterator[tuple]:
        """Immediate specializations: one ALL coordinate set to a domain label."""
        for i, a in enumerate(t):
            if a == ALL:
                for label in self.domains[i]:
                    yield t[:i] + (label,) + t[i + 1:]

    def specializations(self, t: Cell) -> Iterator[Cell]:
        """Every tuple of the space that ``t`` generalizes, BOTTOM included."""
        if t is not BOTTOM:
            choices = [self.domains[i] + (ALL,) if a == ALL else (a,) for i, a in enumerate(t)]
            yield from product(*choices)
        yield BOTTOM

    def __iter__(self) -> Iterator[Cell]:
        yield from product(*(d + (ALL,) for d in self.domains))
        yield BOTTOM

    def __len__(self):
        return self.size


def generalizations(t: Cell, space: Space | None = None) -> Iterator[Cell]:
    """Every tuple generalizing ``t`` (itself included).

    The down-set of BOTTOM is the whole space, so ``space`` is required then.
    """
    if t is BOTTOM:
        if space is None:
            raise DomainError("generalizations of BOTTOM need a space")
        yield from space
        return
    yield from product(*((a, ALL) if a != ALL else (ALL,) for a in t))


def enumerate_space(*relations: Relation, budget: int | None = DEFAULT_BUDGET) -> tuple:
    """All tuples of Space(r) (domains unioned over several relations), canonically ordered."""
    return canonical(Space.of(*relations, budget=budget))
