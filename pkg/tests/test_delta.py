import pytest
from hypothesis import given, strategies as st

from concretecat.concat import check_univalent, conformity_report, is_equiv
from concretecat.config import cap
from concretecat.delta import (Sl, Sr, Z, canonicalize, count_ord, delta_category, enumerate_ord,
                               ord_compose, ord_identity, parse_term, realize)
from concretecat.errors import EnumerationOverflow, NotMonotoneError, RejectedInput
from concretecat.finset import FinFun, compose, enumerate_maps, identity

from oracles import monotone_map_count

SMALL = [(m, n) for m in range(5) for n in range(5)]


def test_constructor_typing():
    assert (Z.m, Z.n) == (0, 0)
    assert (Sr(Z).m, Sr(Z).n) == (0, 1)
    assert (Sl(Sr(Z)).m, Sl(Sr(Z)).n) == (1, 1)
    with pytest.raises(RejectedInput):
        Sl(Z)


def test_identity_normal_form():
    assert str(canonicalize(FinFun(2, 2, (0, 1)))) == "Sl(Sr(Sl(Sr(Z))))"
    assert canonicalize(identity(2)) == ord_identity(2)


def test_not_monotone():
    with pytest.raises(NotMonotoneError):
        canonicalize(FinFun(2, 2, (1, 0)))


@pytest.mark.parametrize("m,n", [(4, 4), (2, 2), (1, 0), (0, 0), (0, 3), (3, 1)])
def test_counts(m, n):
    assert count_ord(m, n) == monotone_map_count(m, n)


def test_count_examples():
    assert count_ord(4, 4) == 35 and count_ord(2, 2) == 3 and count_ord(1, 0) == 0


@pytest.mark.parametrize("m,n", SMALL)
def test_realize_is_a_bijection_onto_monotone_maps(m, n):
    terms = enumerate_ord(m, n)
    tables = [realize(t).table for t in terms]
    assert len(set(tables)) == len(terms)
    assert sorted(tables) == sorted(f.table for f in enumerate_maps(m, n) if f.is_monotone)
    assert all(canonicalize(realize(t)) == t for t in terms)
    assert terms == sorted(terms)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.data())
def test_composition_agrees_with_function_composition(a, b, c, data):
    fs, gs = enumerate_ord(a, b), enumerate_ord(b, c)
    if not fs or not gs:
        return
    f = data.draw(st.sampled_from(fs))
    g = data.draw(st.sampled_from(gs))
    assert realize(ord_compose(g, f)) == compose(realize(g), realize(f))


def test_composition_type_error():
    with pytest.raises(RejectedInput):
        ord_compose(ord_identity(2), ord_identity(1))


def test_parse_round_trip():
    for t in enumerate_ord(2, 3):
        assert parse_term(str(t)) == t
    with pytest.raises(RejectedInput):
        parse_term("Sl(Z")
    with pytest.raises(RejectedInput):
        parse_term("Sq(Z)")


def test_enumeration_cap():
    with cap(5):
        with pytest.raises(EnumerationOverflow):
            enumerate_ord(3, 3)


def test_delta_two_levels():
    C = delta_category(2)
    r = conformity_report(C)
    assert r.minimal_level == 1
    # hom([m],[n]) realised in maps Fin(m+1) -> Fin(n+1): a bijection onto the set only for [0]
    assert r.per_pair[0, 1] == -2 and r.per_pair[1, 1] == -1


def test_delta_object_count_and_homs():
    C = delta_category(3)
    assert C.n_objects == 4
    assert C.hom_size(3, 3) == count_ord(4, 4) == 35


def test_delta_only_identities_are_equivalences():
    C = delta_category(3)
    for x, y in C.pairs():
        for f in C.hom_objects(x, y):
            assert is_equiv(C, x, y, f, 1)[0] == (x == y and f == C.identity(x))
    assert check_univalent(C).univalent
