import itertools

import pytest
from hypothesis import given, strategies as st

from convexcube import (
    ALL,
    BOTTOM,
    ArityError,
    BudgetExceeded,
    DataError,
    DomainError,
    Relation,
    Schema,
    Space,
    enumerate_space,
    generalizes,
    join,
    meet,
    tuple_product,
    tuple_sum,
)
from convexcube.lattice import canonical, canonical_key, generalizations, parents

from conftest import T


def test_generalizes_examples():
    assert generalizes(T("Roman", "*", "*"), T("Roman", "Marseille", "Gallimard"))
    assert generalizes(T("Roman", "*", "*"), BOTTOM)
    assert not generalizes(T("Roman", "*", "*"), T("Scolaire", "Paris", "*"))
    assert not generalizes(BOTTOM, T("Roman", "*", "*"))
    assert generalizes(BOTTOM, BOTTOM)


def test_generalizes_arity_error():
    with pytest.raises(ArityError):
        generalizes(("a", "b"), ("a",))


def test_sum_examples():
    assert tuple_sum(T("Roman", "Marseille", "Gallimard"), T("Roman", "Marseille", "Hachette")) \
        == T("Roman", "Marseille", "*")
    assert tuple_sum(T("Roman", "Marseille", "Gallimard"), T("Essai", "Paris", "Hachette")) \
        == T("*", "*", "*")
    t = T("Roman", "*", "Gallimard")
    assert tuple_sum(t, t) == t
    assert tuple_sum(t, BOTTOM) == t
    assert tuple_sum(BOTTOM, t) == t


def test_product_examples():
    assert tuple_product(T("Roman", "*", "*"), T("*", "Marseille", "*")) \
        == T("Roman", "Marseille", "*")
    assert tuple_product(T("Roman", "*", "*"), T("Scolaire", "*", "*")) is BOTTOM
    t = T("Essai", "Paris", "*")
    assert tuple_product(t, T("*", "*", "*")) == t
    assert tuple_product(t, BOTTOM) is BOTTOM
    with pytest.raises(ArityError):
        tuple_product(("a",), ("a", "b"))


def test_meet_join():
    rows = [T("Roman", "Marseille", "Gallimard"), T("Roman", "Marseille", "Hachette"),
            T("Scolaire", "Paris", "Hachette")]
    assert meet(rows) == T("*", "*", "*")
    assert meet(rows[:2]) == T("Roman", "Marseille", "*")
    assert join([rows[0]]) == rows[0]
    assert join([T("Roman", "*", "*"), T("*", "Marseille", "*"), T("*", "*", "Gallimard")]) \
        == T("Roman", "Marseille", "Gallimard")
    with pytest.raises(DomainError):
        meet([])
    with pytest.raises(DomainError):
        join([])


def test_enumerate_space_document1(doc1):
    space = enumerate_space(doc1)
    assert len(space) == 4 * 3 * 3 + 1 == 37
    assert space[-1] is BOTTOM
    for labels, _ in doc1.rows:
        assert labels in space


def test_enumerate_space_single_row():
    r = Relation.from_rows(["a", "b"], "m", [(("x", "y"), 1)])
    assert len(enumerate_space(r)) == 5


def test_space_unions_domains(doc1, doc2):
    assert Space.of(doc1, doc2).domains == (
        ("Essai", "Roman", "Scolaire"), ("Marseille", "Paris"), ("Gallimard", "Hachette"))


def test_budget():
    r = Relation.from_rows(["a", "b"], "m", [(("x", "y"), 1)])
    with pytest.raises(BudgetExceeded):
        Space.of(r, budget=4)
    assert Space.of(r, budget=None).size == 5


def test_canonical_order():
    ts = [BOTTOM, T("*", "b"), T("a", "*"), T("a", "b"), T("*", "*")]
    assert canonical(ts) == (T("a", "b"), T("a", "*"), T("*", "b"), T("*", "*"), BOTTOM)
    assert canonical_key(BOTTOM) > canonical_key(T("*", "*"))


def test_relation_validation():
    with pytest.raises(DataError):
        Relation.from_rows(["a"], "m", [(("x",), 0)])
    with pytest.raises(DataError):
        Relation.from_rows(["a"], "m", [((ALL,), 1)])
    with pytest.raises(DataError):
        Relation.from_rows(["a"], "m", [(("x", "y"), 1)])
    with pytest.raises(DataError):
        Schema(("a", "a"), "m")
    with pytest.raises(DataError):
        Schema((), "m")
    dup = Relation.from_rows(["a"], "m", [(("x",), 1), (("x",), 2)])
    assert len(dup) == 2


def test_parents_and_generalizations():
    t = T("a", "*", "c")
    assert set(parents(t)) == {T("*", "*", "c"), T("a", "*", "*")}
    assert set(generalizations(t)) == {t, T("*", "*", "c"), T("a", "*", "*"), T("*", "*", "*")}


# --- exhaustive lattice laws on Space(Document1) ---

@pytest.fixture(scope="module")
def space1(doc1):
    return enumerate_space(doc1)


def test_partial_order_axioms(space1):
    for u in space1:
        assert generalizes(u, u)
    for u, v in itertools.product(space1, repeat=2):
        if generalizes(u, v) and generalizes(v, u):
            assert u == v
    for u, v, w in itertools.product(space1, repeat=3):
        if generalizes(u, v) and generalizes(v, w):
            assert generalizes(u, w)


def test_sum_is_greatest_common_generalization(space1):
    for u, v in itertools.product(space1, repeat=2):
        s = tuple_sum(u, v)
        assert generalizes(s, u) and generalizes(s, v)
        for w in space1:
            if generalizes(w, u) and generalizes(w, v):
                assert generalizes(w, s)


def test_product_is_least_common_specialization(space1):
    for u, v in itertools.product(space1, repeat=2):
        p = tuple_product(u, v)
        assert generalizes(u, p) and generalizes(v, p)
        for w in space1:
            if generalizes(u, w) and generalizes(v, w):
                assert generalizes(p, w)


def test_order_via_operators(space1):
    for u, v in itertools.product(space1, repeat=2):
        le = generalizes(u, v)
        assert le == (tuple_sum(u, v) == u) == (tuple_product(u, v) == v)


# --- algebraic laws on random tuples ---

_label = st.sampled_from(["a", "b", ALL])
_cell = st.one_of(st.tuples(_label, _label, _label), st.just(BOTTOM))


@given(_cell, _cell, _cell)
def test_lattice_laws(u, v, w):
    for op in (tuple_sum, tuple_product):
        assert op(u, v) == op(v, u)
        assert op(op(u, v), w) == op(u, op(v, w))
        assert op(u, u) == u
    assert tuple_sum(u, tuple_product(u, v)) == u
    assert tuple_product(u, tuple_sum(u, v)) == u
