import pytest
from hypothesis import given, settings, strategies as st

from legaug.augment import (
    Augmentation,
    IllegalRhoError,
    brute_force_augmentations,
    check_rho,
    eligible,
    enumerate_augmentations,
    filter_augmentations,
    grading_allowed,
    is_augmentation,
)
from legaug.dga import build_dga
from legaug.front import validate

from conftest import knots


@pytest.fixture
def trefoil_dga(trefoil):
    return build_dga(trefoil)


def supports(augs):
    return [a.support for a in augs]


class TestRho:
    @pytest.mark.parametrize("g,rho,ok", [(0, 0, True), (2, 0, False), (3, 1, True), (-2, 2, True), (1, 2, False)])
    def test_grading_allowed(self, g, rho, ok):
        assert grading_allowed(g, rho) is ok

    def test_illegal(self):
        with pytest.raises(IllegalRhoError):
            check_rho(3, 2)
        with pytest.raises(IllegalRhoError):
            check_rho(-1, 0)

    def test_any_rho_with_integer_gradings(self):
        check_rho(5, 0)

    def test_stabilized_rejects_rho_3(self, stab):
        with pytest.raises(IllegalRhoError):
            enumerate_augmentations(build_dga(stab), 3)


class TestIsAugmentation:
    def test_trefoil_examples(self, trefoil_dga):
        assert is_augmentation(trefoil_dga, {"q1"}, 0)
        assert not is_augmentation(trefoil_dga, {"q2"}, 0)
        assert not is_augmentation(trefoil_dga, set(), 0)

    def test_grading_blocks_support(self, trefoil_dga):
        assert not is_augmentation(trefoil_dga, {"q1", "q4"}, 0)

    def test_unknown_name(self, trefoil_dga):
        with pytest.raises(KeyError):
            is_augmentation(trefoil_dga, {"q9"}, 0)


class TestCounts:
    def test_trefoil_graded(self, trefoil_dga):
        assert supports(enumerate_augmentations(trefoil_dga, 0)) == [
            ("q1",), ("q1", "q2"), ("q1", "q2", "q3"), ("q2", "q3"), ("q3",)
        ]

    def test_trefoil_ungraded(self, trefoil_dga):
        assert len(enumerate_augmentations(trefoil_dga, 1)) == 20

    def test_trefoil_two_graded(self, trefoil_dga):
        assert len(enumerate_augmentations(trefoil_dga, 2)) == 5

    def test_unknot(self, unknot):
        dga = build_dga(unknot)
        assert supports(enumerate_augmentations(dga, 0)) == [()]
        assert supports(enumerate_augmentations(dga, 1)) == [(), ("q1",)]

    @pytest.mark.parametrize("rho", [0, 1, 2])
    def test_stabilized_has_none(self, stab, rho):
        assert enumerate_augmentations(build_dga(stab), rho) == []

    def test_json(self):
        assert Augmentation(("q1", "q3"), 2).to_json() == {"support": ["q1", "q3"], "rho": 2}


class TestOracles:
    @pytest.mark.parametrize("rho", [0, 1, 2])
    def test_trefoil_filter_oracle(self, trefoil_dga, rho):
        assert enumerate_augmentations(trefoil_dga, rho) == filter_augmentations(trefoil_dga, rho)

    @settings(max_examples=80)
    @given(knots(max_cusps=3, max_crossings=7), st.sampled_from([0, 1, 2]))
    def test_backtracking_matches_brute_force(self, d, rho):
        dga = build_dga(validate(d))
        if rho == 2 and dga.modulus % 2:
            rho = 1
        if len(eligible(dga, rho)) > 14:
            return
        assert enumerate_augmentations(dga, rho) == brute_force_augmentations(dga, rho)

    @settings(max_examples=30)
    @given(knots(max_cusps=2, max_crossings=5))
    def test_brute_force_matches_filter(self, d):
        dga = build_dga(validate(d))
        assert brute_force_augmentations(dga, 1) == filter_augmentations(dga, 1)

    @given(knots())
    def test_every_result_is_an_augmentation(self, d):
        dga = build_dga(validate(d))
        for a in enumerate_augmentations(dga, 0):
            assert is_augmentation(dga, a.support, 0)

    @given(knots())
    def test_graded_within_two_graded_within_ungraded(self, d):
        dga = build_dga(validate(d))
        s0 = set(supports(enumerate_augmentations(dga, 0)))
        s1 = set(supports(enumerate_augmentations(dga, 1)))
        assert s0 <= s1
        if dga.modulus % 2 == 0:
            s2 = set(supports(enumerate_augmentations(dga, 2)))
            assert s0 <= s2 <= s1
