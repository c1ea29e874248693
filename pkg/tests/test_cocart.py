import random

import pytest

from concretecat.cocart import (A, B, cocart_uniqueness_check, cocartesian_morphisms,
                                check_arrowlike, extract_functor, graph_of_functor, is_cocartesian,
                                is_cocartesian_fibration, iter_category_functors, make_functor)
from concretecat.concat import check_univalent, conformity_report, is_equiv
from concretecat.constructions import FiniteOneCategory, aks_embed, aks_fixtures, disjoint_union, star
from concretecat.config import cap
from concretecat.delta import delta_category
from concretecat.errors import (ArrowlikeViolation, EnumerationOverflow, ExtractionError,
                                RejectedInput)
from concretecat.freecat import Quiver, free_category


def fixture_categories():
    out = {f"delta{n}": delta_category(n) for n in range(3)}
    out["free chain"] = free_category(Quiver(3, [(0, 1), (1, 2)]))
    out["free parallel"] = free_category(Quiver(2, [(0, 1), (0, 1)]))
    out["two points"] = disjoint_union(star(), star())
    for D in aks_fixtures():
        if D.name in ("Z/2", "idempotent", "span shape", "iso pair"):
            out[f"aks {D.name}"] = aks_embed(D)
    return out


CATS = fixture_categories()


def functor_pool():
    pool = []
    names = sorted(CATS)
    for c in names:
        for d in names:
            try:
                with cap(20000):
                    pool += [(c, d, F) for F in iter_category_functors(CATS[c], CATS[d])]
            except EnumerationOverflow:
                continue
    return pool


POOL = functor_pool()


ARROW = free_category(Quiver(2, [(0, 1)]))


def test_arrowlike_violation_lists_the_backward_morphism():
    check_arrowlike(ARROW, (A, B))
    with pytest.raises(ArrowlikeViolation) as e:
        check_arrowlike(ARROW, (B, A))
    assert e.value.pairs == [(0, 1, 0)]
    with pytest.raises(RejectedInput):
        check_arrowlike(ARROW, (A,))
    # Delta(1) has a map [1] -> [0], so it is arrowlike in neither direction
    with pytest.raises(ArrowlikeViolation):
        check_arrowlike(delta_category(1), (A, B))


def test_arrow_category_is_a_fibration():
    AC = check_arrowlike(ARROW, (A, B))
    ok, w = is_cocartesian(AC, 0, 1, 0)
    assert ok and set(w.evidence) == {1}
    assert is_cocartesian_fibration(AC)[0]


def test_non_cocartesian_morphism():
    # 1 <- 0 -> 2: precomposing with 0 -> 1 misses the arrow into 2
    AC = check_arrowlike(free_category(Quiver(3, [(0, 1), (0, 2)])), (A, B, B))
    assert not is_cocartesian(AC, 0, 1, 0)[0]
    assert cocartesian_morphisms(AC, 0) == []
    assert not is_cocartesian_fibration(AC)[0]
    with pytest.raises(ExtractionError):
        extract_functor(AC)


def test_functor_enumeration_counts():
    # functors out of the walking arrow are the morphisms of the target
    D = delta_category(2)
    assert len(list(iter_category_functors(ARROW, D))) == sum(D.hom_size(x, y) for x, y in D.pairs())
    assert len(list(iter_category_functors(delta_category(0), D))) == 3


def test_make_functor_rejects_non_functors():
    C = delta_category(1)
    with pytest.raises(RejectedInput):
        make_functor(C, C, (1, 0), {(0, 0): (0,), (0, 1): (0,), (1, 0): (), (1, 1): (0,)})


def test_graph_is_lawful():
    D = delta_category(2)
    F = next(iter_category_functors(delta_category(1), D))
    AC = graph_of_functor(delta_category(1), D, F)
    r = conformity_report(AC.underlying, require=2)
    assert r.certified[2]


def test_round_trip_on_random_functors():
    rng = random.Random(20261014)
    for c, d, F in rng.sample(POOL, 20):
        E = extract_functor(graph_of_functor(CATS[c], CATS[d], F))
        assert E.functor == F or not check_univalent(CATS[d]).univalent, (c, d)


def test_round_trip_is_exact_into_univalent_targets():
    univalent = {d: check_univalent(C).univalent for d, C in CATS.items()}
    for c, d, F in POOL:
        E = extract_functor(graph_of_functor(CATS[c], CATS[d], F))
        if univalent[d]:
            assert E.functor == F, (c, d)
        else:
            # cocartesian lifts are unique only up to isomorphism here
            D = CATS[d]
            assert all(any(is_equiv(D, x, y, f, 1)[0] for f in D.hom_objects(x, y))
                       for x, y in zip(F.obj_map, E.functor.obj_map))


def test_extraction_can_pick_an_isomorphic_lift():
    C = CATS["delta0"]
    D = CATS["aks iso pair"]
    F = make_functor(C, D, (1,), {(0, 0): (0,)})
    E = extract_functor(graph_of_functor(C, D, F))
    assert E.functor.obj_map == (0,) and not check_univalent(D).univalent


def test_round_trip_from_arrow_into_delta():
    C, D = delta_category(1), delta_category(2)
    for F in iter_category_functors(C, D):
        assert extract_functor(graph_of_functor(C, D, F)).functor == F


@pytest.mark.parametrize("name", sorted(CATS))
def test_uniqueness_on_fixture_graphs(name):
    C = CATS[name]
    F = next(iter_category_functors(C, C))
    report = cocart_uniqueness_check(graph_of_functor(C, C, F))
    if check_univalent(C).univalent:
        assert not report.refused and report.passed
    else:
        assert report.refused and not report.passed and "univalent" in report.explanation


def test_uniqueness_refused_for_a_group():
    C = aks_embed(FiniteOneCategory.from_monoid(((0, 1), (1, 0))))
    F = next(iter_category_functors(C, C))
    assert cocart_uniqueness_check(graph_of_functor(C, C, F)).refused
