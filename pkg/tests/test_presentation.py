import pytest

from icmod import (
    ContractionCase,
    KOutOfRange,
    NonMonomialMinor,
    NotMPrimary,
    Presentation2,
    build_Mk,
    contracted_numeric,
    ell_value,
    fitting0,
    fitting1,
    lemma33_holds,
    monomial_ideal,
    normalize,
    remark34_case,
)
from icmod.staircase import MonomialIdeal

STAIR_B = monomial_ideal((7, 0), (5, 1), (3, 2), (2, 3), (1, 5), (0, 9))


class TestBuild:
    def test_column_layout(self):
        ideal = monomial_ideal((2, 0), (1, 1), (0, 3))
        pres = build_Mk(ideal, 1)
        assert pres.cols == (
            ((1, 0), None),
            ((0, 1), None),
            ((0, 1), (1, 0)),
            (None, (0, 2)),
        )
        assert pres.source == ideal and pres.k == 1

    def test_width_is_r_plus_2(self):
        for k in range(1, STAIR_B.br):
            assert len(build_Mk(STAIR_B, k).cols) == STAIR_B.r + 2

    def test_k_range(self):
        ideal = monomial_ideal((2, 0), (1, 1), (0, 3))
        for k in (0, 3, -1):
            with pytest.raises(KOutOfRange):
                build_Mk(ideal, k)

    def test_unit_rejected(self):
        with pytest.raises(NotMPrimary):
            build_Mk(MonomialIdeal(((0, 0),)), 1)

    def test_principal_like_rejected(self):
        with pytest.raises(NotMPrimary):
            build_Mk(monomial_ideal((0, 1)), 1)

    def test_empty_presentation_rejected(self):
        with pytest.raises(ValueError):
            Presentation2(())
        with pytest.raises(ValueError):
            Presentation2(((None, None),))


class TestFittingIdeals:
    def test_minors_reproduce_ideal(self):
        ideal = monomial_ideal((2, 0), (1, 1), (0, 3))
        assert fitting0(build_Mk(ideal, 1)) == ideal

    def test_entries_ideal(self):
        ideal = monomial_ideal((2, 0), (1, 1), (0, 3))
        assert fitting1(build_Mk(ideal, 1)) == monomial_ideal((1, 0), (0, 1))

    def test_ell_value_formula(self):
        # min of b_{r-1}, k and b_r - k
        assert ell_value(STAIR_B, 1) == 1
        assert ell_value(STAIR_B, 3) == 3
        assert ell_value(STAIR_B, 7) == 2
        assert ell_value(STAIR_B, 8) == 1
        with pytest.raises(KOutOfRange):
            ell_value(STAIR_B, 9)

    def test_binomial_minor_rejected(self):
        pres = Presentation2((((1, 0), (0, 1)), ((0, 1), (1, 0))))
        with pytest.raises(NonMonomialMinor):
            fitting0(pres)

    def test_cancelling_minor_allowed(self):
        # duplicate columns give the zero minor, not a binomial
        col = ((1, 0), (0, 1))
        pres = Presentation2((col, col, ((0, 2), None), (None, (2, 0))))
        assert fitting0(pres) == monomial_ideal((3, 0), (2, 2), (0, 3))

    def test_zero_fitting_rejected(self):
        pres = Presentation2((((1, 0), None), ((2, 0), None)))
        with pytest.raises(NotMPrimary):
            fitting0(pres)

    def test_invariance_under_column_permutation(self):
        pres = build_Mk(STAIR_B, 3)
        perm = list(range(len(pres.cols)))[::-1]
        assert fitting0(pres.permuted(perm)) == fitting0(pres)
        assert fitting1(pres.permuted(perm)) == fitting1(pres)

    def test_transpose_xy_swaps_exponents(self):
        pres = build_Mk(STAIR_B, 3)
        flipped = pres.transpose_xy()
        assert fitting0(flipped) == fitting0(pres).transpose()
        assert fitting1(flipped) == fitting1(pres).transpose()


class TestSufficientConditions:
    def test_small_k_always_qualifies(self):
        for k in range(1, STAIR_B.r):
            assert lemma33_holds(STAIR_B, k)
            assert remark34_case(STAIR_B, k) == ContractionCase.CASE1

    def test_gap_bound_case(self):
        # top gap b_r - b_{r-1} = 2 dominates all consecutive gaps
        ideal = monomial_ideal((2, 0), (1, 2), (0, 4))
        assert remark34_case(ideal, 2) == ContractionCase.CASE2
        assert lemma33_holds(ideal, 2)

    def test_neither_case(self):
        assert remark34_case(STAIR_B, 8) == ContractionCase.NEITHER

    def test_lemma_failure_detected(self):
        # jump of 4 at the top step; k = 8 leaves slack of only 1
        assert not lemma33_holds(STAIR_B, 8)

    def test_lemma_implies_fitting0(self, small_complete):
        for ideal in small_complete:
            for k in range(1, ideal.br):
                if lemma33_holds(ideal, k):
                    assert fitting0(build_Mk(ideal, k)) == ideal

    def test_contracted_numeric(self):
        assert contracted_numeric(build_Mk(STAIR_B, 3))
        ideal = monomial_ideal((2, 0), (1, 1), (0, 3))
        assert contracted_numeric(build_Mk(ideal, 1))
