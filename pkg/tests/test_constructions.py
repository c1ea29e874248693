import pytest

from concretecat.concat import check_unit_assoc, conformity_report, raise_level
from concretecat.constructions import (TYPE_DIVERGENCE, FiniteOneCategory, PointedGroupoid,
                                       aks_embed, aks_fixtures, disjoint_union, empty_category,
                                       monoids_up_to_iso, pointed_category, pointed_level_prediction,
                                       product, search_exact_level_two, slice_groupoid, star,
                                       truncated_maps_category, type_as_category)
from concretecat.delta import delta_category
from concretecat.errors import LevelTooLowError, RejectedInput, StructuralValidationError
from concretecat.fingpd import (bz2, coproduct, cyclic, discrete, indiscrete, trivial,
                                trunc_level_groupoid)

from oracles import monoid_count


@pytest.mark.parametrize("D", aks_fixtures(), ids=lambda D: D.name)
def test_aks_fixtures_are_one_concrete(D):
    r = conformity_report(aks_embed(D), require=2)
    expected = 0 if D.name == "terminal" else 1
    assert r.minimal_level == expected and r.certified[2]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_monoid_enumeration_matches_oracle(n):
    assert len(monoids_up_to_iso(n)) == monoid_count(n) == [1, 2, 7][n - 1]


def test_every_small_monoid_embeds_at_level_one():
    for n in (1, 2, 3):
        for t in monoids_up_to_iso(n):
            r = conformity_report(aks_embed(FiniteOneCategory.from_monoid(t)))
            assert r.minimal_level == (0 if n == 1 else 1)


def test_no_monoid_needs_exactly_level_two():
    # postcomposition on the pairs (y, f) sends the identity to f, so it is always injective
    assert search_exact_level_two(3) is None


def test_bad_monoid_table_is_rejected():
    with pytest.raises(StructuralValidationError):
        FiniteOneCategory.from_monoid(((1, 1), (1, 1)))
    with pytest.raises(StructuralValidationError):
        FiniteOneCategory.from_monoid(((0, 1, 2), (1, 0, 0), (2, 0, 0))).validate()


def test_slices_are_contractible():
    for X in (bz2(), cyclic(3), indiscrete(3), coproduct(bz2(), discrete(2))):
        for x in X.objects:
            assert trunc_level_groupoid(slice_groupoid(X, x)) == -2


@pytest.mark.parametrize("n", range(5))
def test_types_of_sets(n):
    r = conformity_report(type_as_category(discrete(n)), require=1)
    assert r.minimal_level == (0 if n <= 1 else 1)
    assert r.certified[1] and not r.notes


def test_type_of_bz2_diverges():
    r = conformity_report(type_as_category(bz2()), require=1)
    assert r.minimal_level == 2 and not r.certified[1]
    assert TYPE_DIVERGENCE in r.notes


def test_truncated_maps():
    Gs = [discrete(1), discrete(2)]
    C = truncated_maps_category(Gs, -1)
    assert [C.hom_size(*p) for p in [(0, 0), (0, 1), (1, 0), (1, 1)]] == [1, 2, 0, 2]
    assert conformity_report(C).minimal_level <= 1
    C = truncated_maps_category([bz2()], -2)
    assert C.hom_size(0, 0) == 1
    with pytest.raises(RejectedInput):
        truncated_maps_category(Gs, 2)


POINTED = [PointedGroupoid(trivial(), 0), PointedGroupoid(bz2(), 0)]


def test_pointed_obstruction():
    C, obs = pointed_category(POINTED)
    r = conformity_report(C, require=1)
    assert obs.fails_level_one
    assert obs.witnesses[0, 1].n_components == 2
    assert r.minimal_level == 2 == pointed_level_prediction(POINTED)
    assert r.certified == {1: False, 2: True}


def test_pointed_cannot_be_raised_to_level_one():
    C, _ = pointed_category(POINTED)
    with pytest.raises(LevelTooLowError):
        raise_level(C, 1)
    assert raise_level(C, 2).passed


def test_pointed_truncated():
    C, obs = pointed_category(POINTED, truncate=-1)
    r = conformity_report(C, require=1)
    assert not obs.fails_level_one
    assert r.certified[1]


def test_pointed_discrete_targets():
    Ps = [PointedGroupoid(discrete(2), 0), PointedGroupoid(trivial(), 0)]
    C, obs = pointed_category(Ps)
    assert conformity_report(C).minimal_level == pointed_level_prediction(Ps) == 1
    assert not obs.fails_level_one


def test_pointed_rejections():
    with pytest.raises(RejectedInput):
        PointedGroupoid(trivial(), 1)
    with pytest.raises(RejectedInput):
        pointed_category(POINTED, truncate=0)


def test_union_of_points_is_raised_to_level_one():
    C = disjoint_union(star(), star())
    r = conformity_report(C, require=0)
    assert r.minimal_level == 1 and r.certified[1] and not r.certified[0]
    assert len(C.notes) == 2 and "level 1" in C.notes[0]
    assert r.per_pair[0, 1] == -1


def test_union_of_deltas():
    C = disjoint_union(delta_category(2), delta_category(2))
    assert C.n_objects == 6 and C.hom_size(0, 3) == 0
    assert conformity_report(C).minimal_level == 1 and not C.notes
    assert check_unit_assoc(C).passed


def test_product_of_arrows():
    A = delta_category(1)
    C = product(A, A)
    r = conformity_report(C)
    assert r.minimal_level == 1
    for a in range(4):
        for b in range(4):
            (x, y), (x2, y2) = divmod(a, 2), divmod(b, 2)
            assert C.hom_size(a, b) == A.hom_size(x, x2) * A.hom_size(y, y2)
    assert check_unit_assoc(C).passed


def test_product_with_empty():
    C = product(star(), empty_category())
    assert C.n_objects == 0 and conformity_report(C).minimal_level == 0


def test_product_of_points():
    C = product(star(), star())
    assert conformity_report(C).minimal_level == 1 and len(C.notes) == 2
