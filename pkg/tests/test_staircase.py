import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icmod import MonomialIdeal, NotMPrimary, monomial_ideal, normalize
from tests.conftest import brute_colength


def random_ideals():
    """Strategy for m-primary staircase ideals with exponents up to 9."""

    def build(na, nb, extra):
        return normalize([(na, 0), (0, nb)] + extra)

    point = st.tuples(st.integers(0, 9), st.integers(1, 9))
    return st.builds(
        build,
        st.integers(1, 9),
        st.integers(1, 9),
        st.lists(point, max_size=6),
    )


class TestNormalize:
    def test_redundant_generators_dropped(self):
        ideal = normalize([(3, 0), (2, 1), (3, 1), (2, 2), (0, 2)])
        assert ideal.gens == ((3, 0), (2, 1), (0, 2))

    def test_worked_staircase(self):
        ideal = monomial_ideal((5, 0), (4, 2), (3, 3), (2, 4), (1, 6), (0, 7))
        assert ideal.avec == (5, 4, 3, 2, 1, 0)
        assert ideal.bvec == (0, 2, 3, 4, 6, 7)
        assert ideal.r == 5

    def test_requires_pure_x_power(self):
        with pytest.raises(NotMPrimary):
            normalize([(2, 1), (0, 3)])

    def test_requires_pure_y_power(self):
        with pytest.raises(NotMPrimary):
            normalize([(3, 0), (1, 2)])

    def test_empty_rejected(self):
        with pytest.raises(NotMPrimary):
            normalize([])

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            normalize([(2, 0), (0, -1)])

    @given(random_ideals())
    def test_idempotent(self, ideal):
        assert normalize(ideal.gens) == ideal

    @given(random_ideals())
    def test_antichain_shape(self, ideal):
        a = ideal.avec
        b = ideal.bvec
        assert all(a[i] > a[i + 1] for i in range(ideal.r))
        assert all(b[i] < b[i + 1] for i in range(ideal.r))
        assert b[0] == 0 and a[-1] == 0


class TestMembership:
    def test_corner_and_interior(self):
        ideal = monomial_ideal((2, 0), (1, 1), (0, 3))
        assert ideal.member((2, 0))
        assert ideal.member((5, 7))
        assert not ideal.member((1, 0))
        assert not ideal.member((0, 2))

    @given(random_ideals())
    def test_generators_are_members(self, ideal):
        assert all(ideal.member(g) for g in ideal.gens)

    @given(random_ideals())
    def test_contains_self(self, ideal):
        assert ideal.contains(ideal)


class TestInvariants:
    def test_order_is_min_total_degree(self):
        ideal = monomial_ideal((5, 0), (1, 2), (0, 7))
        assert ideal.order() == 3

    def test_colength_small(self):
        # staircase of m^2: three points below
        assert monomial_ideal((2, 0), (1, 1), (0, 2)).colength() == 3

    @given(random_ideals())
    @settings(max_examples=60)
    def test_colength_counts_lattice_points(self, ideal):
        assert ideal.colength() == brute_colength(ideal)

    @given(random_ideals())
    def test_transpose_involution(self, ideal):
        assert ideal.transpose().transpose() == ideal
        assert ideal.transpose().colength() == ideal.colength()
        assert ideal.transpose().order() == ideal.order()

    def test_min_y_exponents(self):
        ideal = monomial_ideal((3, 0), (1, 2), (0, 5))
        heights = ideal.min_y_exponents()
        assert heights == [5, 2, 2]
        for u, h in enumerate(heights):
            assert ideal.member((u, h)) and not ideal.member((u, h - 1))


class TestArithmetic:
    def test_product_of_staircases(self):
        m = monomial_ideal((1, 0), (0, 1))
        assert (m * m).gens == ((2, 0), (1, 1), (0, 2))

    @given(random_ideals(), random_ideals())
    @settings(max_examples=40)
    def test_product_membership(self, left, right):
        for g in left.gens:
            for h in right.gens:
                assert (left * right).member((g[0] + h[0], g[1] + h[1]))

    @given(random_ideals(), st.integers(1, 4))
    @settings(max_examples=40)
    def test_power_is_repeated_product(self, ideal, n):
        expected = ideal
        for _ in range(n - 1):
            expected = expected * ideal
        assert ideal ** n == expected

    def test_power_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            monomial_ideal((1, 0), (0, 1)).power(0)

    @given(random_ideals(), random_ideals())
    @settings(max_examples=40)
    def test_sum_is_union_of_staircases(self, left, right):
        total = left + right
        for u in range(total.a0 + 2):
            for v in range(total.br + 2):
                assert total.member((u, v)) == (
                    left.member((u, v)) or right.member((u, v))
                )

    @given(random_ideals(), random_ideals())
    @settings(max_examples=40)
    def test_colength_subadditive_under_product(self, left, right):
        assert (left * right).colength() >= left.colength() + right.colength()


def test_str_uses_generator_notation():
    assert str(monomial_ideal((2, 0), (1, 1), (0, 3))) == "(x^2, x*y, y^3)"


def test_unit_ideal_flag():
    assert MonomialIdeal(((0, 0),)).is_unit
    assert not monomial_ideal((1, 0), (0, 1)).is_unit
