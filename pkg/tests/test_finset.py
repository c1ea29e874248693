import pytest
from hypothesis import given, strategies as st

from concretecat.config import cap
from concretecat.errors import EnumerationOverflow, RejectedInput
from concretecat.finset import (BIJECTION, INJECTION, SET_MAP, FinFun, FinSet, compose,
                                connectivity_witness, enumerate_maps, fiber, identity, inverse,
                                trunc_level_set_map)

from oracles import set_map_level


@st.composite
def fin_funs(draw, max_size=6):
    m = draw(st.integers(0, max_size))
    n = draw(st.integers(1 if m else 0, max_size))
    table = draw(st.lists(st.integers(0, n - 1), min_size=m, max_size=m)) if n else []
    return FinFun(m, n, table)


def test_finset_basics():
    S = FinSet(3)
    assert list(S) == [0, 1, 2] and len(S) == 3 and 2 in S and 3 not in S
    with pytest.raises(RejectedInput):
        FinSet(-1)


def test_table_is_validated():
    with pytest.raises(RejectedInput):
        FinFun(2, 2, (0,))
    with pytest.raises(RejectedInput):
        FinFun(1, 2, (2,))


def test_compose_requires_matching_ends():
    with pytest.raises(RejectedInput):
        compose(identity(2), identity(3))


@given(fin_funs())
def test_identity_is_a_unit(f):
    assert compose(identity(f.cod), f) == f == compose(f, identity(f.dom))


@given(fin_funs())
def test_level_matches_fiber_oracle(f):
    assert trunc_level_set_map(f) == set_map_level(f.table, f.cod.size)


def test_level_examples():
    assert trunc_level_set_map(FinFun(2, 2, (1, 0))) == BIJECTION
    assert trunc_level_set_map(FinFun(2, 3, (0, 2))) == INJECTION
    assert trunc_level_set_map(FinFun(2, 1, (0, 0))) == SET_MAP
    assert trunc_level_set_map(FinFun(0, 0, ())) == BIJECTION
    assert trunc_level_set_map(FinFun(0, 2, ())) == INJECTION


def test_fiber():
    f = FinFun(4, 2, (1, 0, 1, 1))
    assert fiber(f, 1) == [0, 2, 3] and fiber(f, 0) == [1]
    with pytest.raises(RejectedInput):
        fiber(f, 2)


@given(fin_funs())
def test_inverse_exactly_for_bijections(f):
    g = inverse(f)
    if trunc_level_set_map(f) == BIJECTION:
        assert compose(g, f) == identity(f.dom)
    else:
        assert g is None


@pytest.mark.parametrize("m,n", [(a, b) for a in range(6) for b in range(6)])
def test_connectivity_witness_always_exists(m, n):
    direction, f = connectivity_witness(m, n)
    if direction == "forward":
        assert (f.dom.size, f.cod.size) == (m, n)
    else:
        assert (f.dom.size, f.cod.size) == (n, m)


def test_enumerate_maps_counts_and_order():
    maps = enumerate_maps(2, 3)
    assert len(maps) == 9
    assert [f.table for f in maps] == sorted(f.table for f in maps)
    assert len(enumerate_maps(0, 0)) == 1 and len(enumerate_maps(1, 0)) == 0


def test_enumerate_maps_respects_cap():
    with cap(10):
        with pytest.raises(EnumerationOverflow):
            enumerate_maps(3, 3)


def test_monotone_flag():
    assert FinFun(3, 3, (0, 0, 2)).is_monotone
    assert not FinFun(2, 2, (1, 0)).is_monotone
