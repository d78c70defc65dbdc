import pytest

from convexcube import BOTTOM, Border, BudgetExceeded, parse_conjunction
from convexcube.oracle import (
    brute_force_solutions,
    extract_borders,
    is_convex,
    naive_aggregate,
    naive_space,
)

from conftest import T

HYBRID_SOLUTIONS = {
    T("Roman", "Marseille", "*"), T("*", "Marseille", "Hachette"), T("Essai", "Paris", "Hachette"),
    T("Essai", "Paris", "*"), T("Essai", "*", "Hachette"), T("Roman", "*", "*"),
    T("Essai", "*", "*"), T("*", "Marseille", "*"),
}


def test_hybrid_solution_set(doc1):
    sol = brute_force_solutions(doc1, parse_conjunction("sum >= 3 AND sum <= 6"))
    # hand sums from Table 1: 4, 3, 6, 6, 6, 4, 6, 5
    assert set(sol.tuples) == HYBRID_SOLUTIONS
    for t in HYBRID_SOLUTIONS:
        assert 3 <= naive_aggregate(t, doc1, "sum") <= 6


def test_datacube_solution_set(doc1):
    sol = brute_force_solutions(doc1, parse_conjunction("count >= 1"))
    assert len(sol) == 24
    assert BOTTOM not in sol


def test_unsatisfiable(doc1):
    assert len(brute_force_solutions(doc1, parse_conjunction("sum >= 100"))) == 0


def test_extract_borders():
    assert extract_borders(HYBRID_SOLUTIONS) == Border(
        [T("Roman", "*", "*"), T("Essai", "*", "*"), T("*", "Marseille", "*")],
        [T("Roman", "Marseille", "*"), T("*", "Marseille", "Hachette"),
         T("Essai", "Paris", "Hachette")])
    assert extract_borders({T("a", "*")}) == Border([T("a", "*")], [T("a", "*")])
    assert extract_borders(set()) == Border.empty()


def test_convexity_negative_control(doc1):
    space = naive_space([doc1])

    # top (12) and BOTTOM (0) are even while (Scolaire, Marseille, Hachette) is 1
    def even_sum(t):
        return naive_aggregate(t, doc1, "sum") % 2 == 0

    assert not is_convex(brute_force_solutions(doc1, even_sum), space)
    assert is_convex(brute_force_solutions(doc1, parse_conjunction("sum >= 3 AND sum <= 6")), space)


def test_budget(doc1):
    with pytest.raises(BudgetExceeded):
        naive_space([doc1], budget=36)
    assert len(naive_space([doc1], budget=37)) == 37
