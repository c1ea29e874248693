from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from concretecat.errors import RejectedInput
from concretecat.finset import FinSet
from concretecat.spans import (CAVEAT, Family, Span, endo_fiber_analysis, endo_fiber_count,
                               enumerate_spans, family_iso, identity_span, product_span,
                               pull_push, span_compose, span_iso, span_iso_oracle, spans_up_to_iso)

from oracles import span_compose_legs, spans_isomorphic


def legs(s):
    return list(zip(s.left.table, s.right.table))


def classes(x, y, max_apex):
    return [s for k in range(max_apex + 1) for s in spans_up_to_iso(x, y, k)]


def iso(s, t):
    return span_iso(s, t) is not None


def spans(max_end=3, max_apex=3):
    @st.composite
    def build(draw, x=None, y=None):
        x = draw(st.integers(0, max_end)) if x is None else x
        y = draw(st.integers(0, max_end)) if y is None else y
        k = draw(st.integers(0, max_apex)) if x and y else 0
        left = draw(st.lists(st.integers(0, max(x - 1, 0)), min_size=k, max_size=k))
        right = draw(st.lists(st.integers(0, max(y - 1, 0)), min_size=k, max_size=k))
        return Span.of(x, y, left, right)
    return build


def test_iso_matches_oracles_exhaustively():
    for x, y, k in [(1, 2, 3), (2, 2, 2), (2, 1, 3), (3, 1, 2)]:
        ss = list(enumerate_spans(x, y, k))
        for s in ss:
            for t in ss[::3]:
                found = span_iso(s, t)
                assert (found is not None) == span_iso_oracle(s, t) == spans_isomorphic(legs(s), legs(t))
                if found is not None:
                    assert all(t.left(found(u)) == s.left(u) and t.right(found(u)) == s.right(u)
                               for u in s.apex)


def test_iso_classes_are_complete_and_distinct():
    for x, y, k in [(2, 2, 2), (1, 3, 3), (2, 1, 3)]:
        reps = list(spans_up_to_iso(x, y, k))
        for i, s in enumerate(reps):
            assert not any(iso(s, t) for t in reps[:i])
        for s in enumerate_spans(x, y, k):
            assert sum(iso(s, r) for r in reps) == 1


def test_composition_matches_oracle():
    for s in classes(2, 3, 3):
        for t in classes(3, 2, 2):
            assert spans_isomorphic(legs(span_compose(t, s)), span_compose_legs(legs(t), legs(s)))


def test_unit_laws_exhaustive():
    for x in range(4):
        for y in range(4):
            for s in classes(x, y, 3):
                assert iso(span_compose(identity_span(FinSet(y)), s), s)
                assert iso(span_compose(s, identity_span(FinSet(x))), s)


def check_assoc(x, y, z, w, max_apex):
    for s in classes(x, y, max_apex):
        for t in classes(y, z, max_apex):
            ts = span_compose(t, s)
            for u in classes(z, w, max_apex):
                assert iso(span_compose(u, ts), span_compose(span_compose(u, t), s))


@pytest.mark.parametrize("x", range(3))
def test_associativity_small_endpoints_all_apexes(x):
    for y in range(3):
        for z in range(3):
            for w in range(3):
                check_assoc(x, y, z, w, 3)


@pytest.mark.parametrize("x", range(4))
def test_associativity_all_endpoints_small_apexes(x):
    for y in range(4):
        for z in range(4):
            for w in range(4):
                check_assoc(x, y, z, w, 1)


@given(st.data())
def test_associativity_random(data):
    x, y, z, w = (data.draw(st.integers(0, 3)) for _ in range(4))
    s = data.draw(spans()(x, y))
    t = data.draw(spans()(y, z))
    u = data.draw(spans()(z, w))
    assert iso(span_compose(u, span_compose(t, s)), span_compose(span_compose(u, t), s))


def test_mismatched_composition():
    with pytest.raises(RejectedInput):
        span_compose(identity_span(FinSet(2)), identity_span(FinSet(3)))


@given(st.data())
def test_pull_push_respects_composition(data):
    x, y, z = (data.draw(st.integers(0, 3)) for _ in range(3))
    s = data.draw(spans()(x, y))
    t = data.draw(spans()(y, z))
    base = data.draw(st.lists(st.integers(0, max(x - 1, 0)), max_size=4 if x else 0))
    A = Family.of(x, base)
    assert family_iso(pull_push(span_compose(t, s), A), pull_push(t, pull_push(s, A))) is not None


def test_pull_push_of_identity():
    A = Family.of(3, [0, 2, 2])
    assert family_iso(pull_push(identity_span(FinSet(3)), A), A) is not None
    assert family_iso(A, Family.of(3, [0, 2])) is None


def test_product_span_multiplies_fibers():
    A = Family.of(1, [0, 0, 0])
    assert pull_push(product_span(2), A).total.size == 6


@pytest.mark.parametrize("u,universe", [(0, 2), (1, 2), (2, 2), (1, 3), (2, 1), (3, 2)])
def test_endo_fiber_count_matches_closed_form(u, universe):
    r = endo_fiber_analysis(FinSet(u), universe)
    assert r.count == r.closed_form == (endo_fiber_count(u, universe) if u <= universe else 0)


def test_endo_fiber_over_two():
    r = endo_fiber_analysis(FinSet(2), 2)
    assert r.count == 48 and len(r.witnesses) >= 2
    assert r.swap_witness is not None
    assert r.caveat == CAVEAT


def test_endo_fiber_over_zero_is_a_point():
    r = endo_fiber_analysis(FinSet(0), 2)
    assert r.count == 1 and len(r.witnesses) == 1


def test_one_point_universe_counts_automorphisms():
    for u in range(2):
        assert endo_fiber_analysis(FinSet(u), 1).count == len(list(permutations(range(u))))


def test_universe_must_contain_one():
    with pytest.raises(RejectedInput):
        endo_fiber_analysis(FinSet(1), 0)
