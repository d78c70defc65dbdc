"""Condensed (G, S) representation of convex cubes.

``compute_borders`` sweeps the lattice level by level (level = number of
concrete coordinates).  Antimonotone atoms prune: a tuple is only visited
when every parent passed them, as in Apriori.  Monotone atoms short-circuit:
a tuple below a monotone-satisfying parent inherits the verdict.  Because the
solution set is convex, a solution is minimal iff none of its parents is a
solution and maximal iff none of its children is.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from .constraints import Conjunction, Monotonicity, classify, constraint_diagnostics, satisfies
from .errors import AntichainError, ConfigurationError
from .lattice import (
    ALL,
    BOTTOM,
    DEFAULT_BUDGET,
    Cell,
    Relation,
    Space,
    canonical,
    generalizations,
    generalizes,
    parents,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Border:
    """Minimal (``G``, most general) and maximal (``S``, most specific) tuples."""

    G: tuple
    S: tuple

    def __post_init__(self):
        object.__setattr__(self, "G", canonical(self.G))
        object.__setattr__(self, "S", canonical(self.S))

    @classmethod
    def empty(cls) -> "Border":
        return cls((), ())

    @property
    def is_empty(self) -> bool:
        return not self.G and not self.S

    def __contains__(self, t) -> bool:
        return is_member(t, self)

    def validate(self) -> None:
        """Raise if G or S is not an anti-chain or the two sets do not pair up."""
        check_antichain(self.G)
        check_antichain(self.S)
        if bool(self.G) != bool(self.S):
            raise AntichainError("exactly one of G and S is empty")
        for s in self.S:
            if not any(generalizes(g, s) for g in self.G):
                raise AntichainError(f"S element {s} specializes no G element")
        for g in self.G:
            if not any(generalizes(g, s) for s in self.S):
                raise AntichainError(f"G element {g} generalizes no S element")


def is_antichain(tuples: Iterable[Cell]) -> bool:
    tuples = list(set(tuples))
    for i, u in enumerate(tuples):
        for v in tuples[i + 1:]:
            if generalizes(u, v) or generalizes(v, u):
                return False
    return True


def check_antichain(tuples: Iterable[Cell]) -> None:
    if not is_antichain(tuples):
        raise AntichainError("input is not an anti-chain")


def minimal(tuples: Iterable[Cell]) -> tuple:
    """Most general elements of a finite set (pairwise comparison)."""
    pool = set(tuples)
    return canonical(t for t in pool if not any(u != t and generalizes(u, t) for u in pool))


def maximal(tuples: Iterable[Cell]) -> tuple:
    """Most specific elements of a finite set (pairwise comparison)."""
    pool = set(tuples)
    return canonical(t for t in pool if not any(u != t and generalizes(t, u) for u in pool))


def is_member(t: Cell, border: Border) -> bool:
    """Decide membership in a convex cube from its borders alone."""
    return any(generalizes(g, t) for g in border.G) and any(generalizes(t, s) for s in border.S)


def _as_space(space, budget=DEFAULT_BUDGET) -> Space:
    if isinstance(space, Space):
        return space
    if isinstance(space, Relation):
        return Space.of(space, budget=budget)
    return Space.of(*space, budget=budget)


def _check_classified(conj: Conjunction) -> None:
    for atom in conj.atoms:
        if not isinstance(classify(atom), Monotonicity):
            raise ConfigurationError(f"cannot classify atom {atom}")


def solution_set(space, conj: Conjunction, budget: int | None = DEFAULT_BUDGET) -> frozenset:
    """Every tuple of the space satisfying ``conj``, found by a pruned level-wise sweep."""
    space = _as_space(space, budget)
    _check_classified(conj)
    rels = space.relations
    am, mo = conj.antimonotone, conj.monotone

    solutions = set()
    # survivors: tuple -> does it satisfy the monotone part
    frontier = {}
    top = space.top
    if satisfies(top, am, rels):
        frontier[top] = satisfies(top, mo, rels)
    while frontier:
        solutions.update(t for t, ok in frontier.items() if ok)
        nxt = {}
        for t, _ in frontier.items():
            # canonical extension: specialize only after the last concrete coordinate
            last = max((i for i, a in enumerate(t) if a != ALL), default=-1)
            for i in range(last + 1, space.arity):
                for label in space.domains[i]:
                    child = t[:i] + (label,) + t[i + 1:]
                    ups = list(parents(child))
                    if any(p not in frontier for p in ups):
                        continue
                    if not satisfies(child, am, rels):
                        continue
                    inherited = any(frontier[p] for p in ups)
                    nxt[child] = inherited or satisfies(child, mo, rels)
        frontier = nxt
    if satisfies(BOTTOM, conj, rels):
        solutions.add(BOTTOM)
    return frozenset(solutions)


def borders_of_convex(solutions: frozenset, space: Space) -> Border:
    """G and S of a convex solution set using only immediate neighbours."""
    if not solutions:
        return Border.empty()
    if solutions == {BOTTOM}:
        return Border((BOTTOM,), (BOTTOM,))
    G = [t for t in solutions if t is not BOTTOM and not any(p in solutions for p in parents(t))]
    if BOTTOM in solutions:
        S = [BOTTOM]
    else:
        S = [t for t in solutions if not any(c in solutions for c in space.children(t))]
    return Border(G, S)


def compute_borders(space, conj: Conjunction, budget: int | None = DEFAULT_BUDGET) -> Border:
    """Borders of ``{t in CL(space) | conj(t)}``.

    ``space`` is a relation, a sequence of relations sharing a schema (atoms
    bind to them by position), or a prepared :class:`Space`.
    """
    space = _as_space(space, budget)
    constraint_diagnostics(conj, space.relations)
    return borders_of_convex(solution_set(space, conj), space)


def _require(conj: Conjunction, kind: Monotonicity) -> None:
    for atom in conj.atoms:
        if classify(atom) is not kind:
            raise ConfigurationError(f"atom {atom} is not {kind.value}")


def borders_from_S(S_camc: Iterable[Cell], cmc: Conjunction, space,
                   budget: int | None = DEFAULT_BUDGET) -> Border:
    """Hybrid borders from the antimonotone part's S and the monotone conjunction."""
    space = _as_space(space, budget)
    S_camc = canonical(S_camc)
    check_antichain(S_camc)
    _require(cmc, Monotonicity.MONOTONE)
    below = set()
    for s in S_camc:
        below.update(generalizations(s, space))
    G = minimal(t for t in below if satisfies(t, cmc, space.relations))
    S = [s for s in S_camc if any(generalizes(g, s) for g in G)]
    return Border(G, S)


def borders_from_G(G_cmc: Iterable[Cell], camc: Conjunction, space,
                   budget: int | None = DEFAULT_BUDGET) -> Border:
    """Hybrid borders from the monotone part's G and the antimonotone conjunction."""
    space = _as_space(space, budget)
    G_cmc = canonical(G_cmc)
    check_antichain(G_cmc)
    _require(camc, Monotonicity.ANTIMONOTONE)
    above = set()
    for g in G_cmc:
        above.update(space.specializations(g))
    S = maximal(t for t in above if satisfies(t, camc, space.relations))
    G = [g for g in G_cmc if any(generalizes(g, s) for s in S)]
    return Border(G, S)
