"""Aggregates over a relation and monotone/antimonotone constraint conjunctions.

All arithmetic is exact (``fractions.Fraction``).  A conjunction's atoms are
bound to relations by position: atom ``relation=0`` reads the first relation
of the evaluation context, ``relation=1`` the second.
"""

from __future__ import annotations

import enum
import logging
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import ArityError, ConfigurationError, DomainError
from .lattice import ALL, BOTTOM, Cell, Relation, tupall

log = logging.getLogger(__name__)


class Aggregate(str, enum.Enum):
    COUNT = "count"
    SUM = "sum"

    @classmethod
    def coerce(cls, f) -> "Aggregate":
        if isinstance(f, cls):
            return f
        name = str(f).strip().lower()
        if name in ("min", "max", "avg"):
            raise ConfigurationError(
                f"{name.upper()} is not supported: only COUNT and SUM have border semantics here"
            )
        try:
            return cls(name)
        except ValueError:
            raise ConfigurationError(f"unknown aggregate {f!r} (expected count or sum)") from None


class Monotonicity(enum.Enum):
    MONOTONE = "monotone"
    ANTIMONOTONE = "antimonotone"


@lru_cache(maxsize=64)
def _cube_table(r: Relation) -> dict:
    # (count, sum) for every tuple covering at least one row: 2^d cells per row
    table = {}
    n = r.arity
    for labels, measure in r.rows:
        for k in range(n + 1):
            for idx in combinations(range(n), k):
                cell = list(labels)
                for i in idx:
                    cell[i] = ALL
                cell = tuple(cell)
                count, total = table.get(cell, (0, Fraction(0)))
                table[cell] = (count + 1, total + measure)
    return table


def aggregate(t: Cell, r: Relation, f) -> Fraction:
    """COUNT or SUM over the rows of ``r`` that ``t`` generalizes."""
    f = Aggregate.coerce(f)
    if t is BOTTOM:
        return Fraction(0)
    if len(t) != r.arity:
        raise ArityError(f"tuple {t} does not match schema {r.dimensions}")
    count, total = _cube_table(r).get(t, (0, Fraction(0)))
    return Fraction(count) if f is Aggregate.COUNT else total


def relative_aggregate(t: Cell, r: Relation, f) -> Fraction:
    if not r.rows:
        raise DomainError("relative aggregate over an empty relation")
    return aggregate(t, r, f) / aggregate(tupall(r.arity), r, f)


_COMPARATORS = {
    ">=": operator.ge,
    ">": operator.gt,
    "<=": operator.le,
    "<": operator.lt,
}


@dataclass(frozen=True)
class Atom:
    """``f(t) op threshold`` evaluated against one relation, absolute or relative."""

    func: Aggregate
    op: str
    threshold: Fraction
    relative: bool = False
    relation: int = 0

    def __post_init__(self):
        object.__setattr__(self, "func", Aggregate.coerce(self.func))
        if self.op not in _COMPARATORS:
            raise ConfigurationError(f"unknown comparator {self.op!r}")
        threshold = Fraction(self.threshold)
        object.__setattr__(self, "threshold", threshold)
        if threshold < 0:
            raise DomainError(f"threshold must be nonnegative, got {threshold}")
        if self.relative and not 0 < threshold < 1:
            raise DomainError(f"relative threshold must lie in (0, 1), got {threshold}")
        if self.relation < 0:
            raise ConfigurationError("relation index must be nonnegative")

    def value(self, t: Cell, relations: Sequence[Relation]) -> Fraction:
        try:
            r = relations[self.relation]
        except IndexError:
            raise ConfigurationError(
                f"atom {self} reads relation {self.relation + 1} but only "
                f"{len(relations)} relation(s) are loaded"
            ) from None
        if self.relative:
            return relative_aggregate(t, r, self.func)
        return aggregate(t, r, self.func)

    def holds(self, t: Cell, relations: Sequence[Relation]) -> bool:
        return _COMPARATORS[self.op](self.value(t, relations), self.threshold)

    def __str__(self):
        n = self.relation + 1
        if self.relative:
            lhs = f"share{n}({self.func.value})"
        else:
            lhs = self.func.value + (str(n) if n > 1 else "")
        return f"{lhs} {self.op} {self.threshold}"


def classify(atom: Atom) -> Monotonicity:
    """COUNT and SUM (positive measures) only grow when a tuple is generalized."""
    if atom.op in (">=", ">"):
        return Monotonicity.ANTIMONOTONE
    return Monotonicity.MONOTONE


@dataclass(frozen=True)
class Conjunction:
    atoms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))

    @classmethod
    def parse(cls, text: str) -> "Conjunction":
        return parse_conjunction(text)

    @property
    def monotone(self) -> "Conjunction":
        return Conjunction(a for a in self.atoms if classify(a) is Monotonicity.MONOTONE)

    @property
    def antimonotone(self) -> "Conjunction":
        return Conjunction(a for a in self.atoms if classify(a) is Monotonicity.ANTIMONOTONE)

    @property
    def kind(self) -> str:
        """``cmc``, ``camc``, ``chc``, or ``true`` for the empty conjunction."""
        has_m = bool(self.monotone.atoms)
        has_a = bool(self.antimonotone.atoms)
        if has_m and has_a:
            return "chc"
        if has_m:
            return "cmc"
        if has_a:
            return "camc"
        return "true"

    @property
    def arity(self) -> int:
        """Number of relations the atoms read."""
        return max((a.relation + 1 for a in self.atoms), default=1)

    def __and__(self, other: "Conjunction") -> "Conjunction":
        return Conjunction(self.atoms + other.atoms)

    def __str__(self):
        return " AND ".join(str(a) for a in self.atoms) if self.atoms else "true"


def _relations(relations) -> tuple:
    if isinstance(relations, Relation):
        return (relations,)
    return tuple(relations)


def satisfies(t: Cell, conj: Conjunction, relations) -> bool:
    relations = _relations(relations)
    return all(a.holds(t, relations) for a in conj.atoms)


def constraint_diagnostics(conj: Conjunction, relations) -> list:
    """Boundary hypotheses the conjunction breaks, as human-readable strings.

    Evaluation stays literal; these only flag degenerate solution spaces.
    """
    relations = _relations(relations)
    top = tupall(relations[0].arity)
    am, mo = conj.antimonotone, conj.monotone
    issues = []
    if am.atoms and not satisfies(top, am, relations):
        issues.append("the all-ALL tuple fails the antimonotone part: solution set is empty")
    if mo.atoms and not satisfies(BOTTOM, mo, relations):
        issues.append("the empty tuple fails the monotone part: solution set is empty")
    if mo.atoms and satisfies(top, mo, relations):
        issues.append("the all-ALL tuple satisfies the monotone part: it is vacuous")
    if am.atoms and satisfies(BOTTOM, am, relations):
        issues.append("the empty tuple satisfies the antimonotone part: it is vacuous")
    for issue in issues:
        log.warning("constraint %s: %s", conj, issue)
    return issues


_NUMBER = r"\d+(?:\.\d*)?(?:/\d+)?|\.\d+"
_ATOM_RE = re.compile(
    r"""^\s*
    (?P<func>share[12]?|[a-z]+[12]?)     # count, sum2, share1 ...
    \s*(?:\(\s*(?P<arg>[^)]*?)\s*\))?     # optional argument
    \s*(?P<op>>=|<=|>|<)\s*
    (?P<num>""" + _NUMBER + r""")\s*$""",
    re.VERBOSE | re.IGNORECASE,
)
_AND_RE = re.compile(r"\s+and\s+|\s*&&\s*", re.IGNORECASE)


def parse_number(text: str) -> Fraction:
    """Exact rational from ``3``, ``0.25`` or ``1/15``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigurationError(f"not a number: {text!r}") from None


def parse_atom(text: str) -> Atom:
    m = _ATOM_RE.match(text)
    if not m:
        raise ConfigurationError(f"cannot parse constraint atom {text!r}")
    func = m["func"].lower()
    arg = (m["arg"] or "").strip()
    relative = func.startswith("share")
    relation = 0
    if func[-1] in "12":
        relation = int(func[-1]) - 1
        func = func[:-1]
    if relative:
        if not arg:
            raise ConfigurationError(f"share needs an aggregate argument, e.g. share1(sum): {text!r}")
        func = arg.lower()
        if "(" in func:
            func = func.split("(")[0]
    elif func == "count" and arg not in ("", "*"):
        raise ConfigurationError(f"count takes '*' as its argument: {text!r}")
    return Atom(Aggregate.coerce(func), m["op"], parse_number(m["num"]), relative, relation)


def parse_conjunction(text: str) -> Conjunction:
    """Parse ``count(*) >= 1 AND share2(sum) >= 1/5`` style text."""
    text = text.strip()
    if not text or text.lower() == "true":
        return Conjunction()
    return Conjunction(parse_atom(part) for part in _AND_RE.split(text))
