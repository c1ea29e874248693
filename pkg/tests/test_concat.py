import pytest

from concretecat.concat import (ConcreteCategory, FiberElement, check_pentagon_triangle,
                                check_unit_assoc, check_univalent, conformity_report,
                                full_subcategory, is_equiv, raise_level, required_suites)
from concretecat.constructions import collision_fixture, star, two_group_bz2, unlawful_fixture
from concretecat.delta import delta_category
from concretecat.errors import LevelTooLowError, RejectedInput, StructuralValidationError
from concretecat.fingpd import NatIso, bz2, discrete, trivial


def test_required_suites():
    assert required_suites(0) == required_suites(1) == []
    assert required_suites(2) == ["unit/assoc"]
    assert required_suites(3) == ["unit/assoc", "pentagon/triangle"]


def test_star_is_zero_concrete():
    r = conformity_report(star())
    assert r.conformity_level == 0 and r.minimal_level == 0
    assert r.per_pair == {(0, 0): -2}


def test_full_subcategory_of_groupoids():
    C = full_subcategory([trivial(), bz2()])
    r = conformity_report(C)
    assert r.minimal_level == 0
    assert C.hom_size(0, 1) == 1 and C.hom_size(1, 1) == 2


def test_raise_level_goes_up_not_down():
    C = delta_category(1)
    assert raise_level(C, 2).passed
    with pytest.raises(LevelTooLowError):
        raise_level(C, 0)


def test_require_argument_is_bounded():
    with pytest.raises(RejectedInput):
        conformity_report(star(), require=4)


def test_unlawful_fixture_is_refused_at_its_level():
    C = unlawful_fixture()
    r = conformity_report(C)
    assert r.conformity_level == 2 and r.minimal_level is None
    laws = r.law_status["unit/assoc"]
    assert not laws.passed
    assert {v["law"] for v in laws.violations} >= {"left unit", "right unit"}


def test_collision_fixture_needs_level_two():
    r = conformity_report(collision_fixture())
    assert r.per_pair[0, 0] == 0 and r.minimal_level == 2
    assert r.fiber_witnesses[0, 0].n_components == 2


def test_coherent_two_group_needs_level_three():
    r = conformity_report(two_group_bz2(0))
    assert r.conformity_level == 3 and r.minimal_level == 3
    assert r.law_status["pentagon/triangle"].passed


def test_corrupted_associator_breaks_pentagon():
    report = check_pentagon_triangle(two_group_bz2(1))
    assert not report.passed
    assert {v["law"] for v in report.violations} == {"pentagon", "triangle"}


def test_discrete_homs_short_circuit_pentagon():
    r = check_pentagon_triangle(delta_category(1))
    assert r.passed and "discrete" in r.note


def test_validation_names_the_broken_identity():
    C = star()
    I = C.realise(0, 0, 0)
    bad = ConcreteCategory(1, C.obj_plus, C.hom, C.hom_plus, [FiberElement(1, NatIso(I, I, (0,)))],
                           C.cmp)
    with pytest.raises(StructuralValidationError) as e:
        bad.validate()
    assert e.value.component == "ident(0)"


def test_validation_names_a_missing_composite():
    C = delta_category(1)
    cmp = dict(C.cmp)
    cmp.pop((0, 1, 1, 0, 0))
    bad = ConcreteCategory(C.n_objects, C.obj_plus, C.hom, C.hom_plus, C.ident, cmp)
    with pytest.raises(StructuralValidationError) as e:
        bad.validate()
    assert e.value.component.startswith("cmp(0,1,1")


def test_unit_assoc_on_delta():
    r = check_unit_assoc(delta_category(2))
    assert r.passed and r.checked > 0


def test_equivalences_in_full_subcategory():
    C = full_subcategory([discrete(2), discrete(2)])
    swap = C.hom[0, 1].label_index(next(F for F in C.hom[0, 1].object_labels if F.obj_map == (1, 0)))
    for level in (0, 1, 2):
        assert is_equiv(C, 0, 1, swap, level)[0]
    const = next(i for i, F in enumerate(C.hom[0, 1].object_labels) if F.obj_map == (0, 0))
    assert not is_equiv(C, 0, 1, const, 0)[0]
    # two copies of the same object are equivalent, so this is not univalent
    assert not check_univalent(C).univalent


def test_delta_is_univalent():
    assert check_univalent(delta_category(2)).univalent


def test_realisation_materialises_into_functor_groupoid():
    C = delta_category(1)
    F = C.hom_plus[0, 1].as_functor()
    F.validate()
    assert F.dom.n_objects == 2
