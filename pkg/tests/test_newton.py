import pytest
from hypothesis import given, settings

from icmod import (
    Factorization,
    NotComplete,
    NotMPrimary,
    SimpleFactor,
    closure,
    is_complete,
    is_simple,
    monomial_ideal,
    newton_vertices,
    normalize,
    reconstruct,
    simple_divides,
    simple_ideal,
    zariski_factor,
)
from icmod.staircase import MonomialIdeal
from tests.test_staircase import random_ideals

STAIR_A = monomial_ideal((5, 0), (4, 2), (3, 3), (2, 4), (1, 6), (0, 7))
STAIR_B = monomial_ideal((7, 0), (5, 1), (3, 2), (2, 3), (1, 5), (0, 9))


class TestVertices:
    def test_stair_a(self):
        assert newton_vertices(STAIR_A).vertices == ((5, 0), (2, 4), (0, 7))

    def test_stair_b(self):
        assert newton_vertices(STAIR_B).vertices == (
            (7, 0),
            (3, 2),
            (2, 3),
            (1, 5),
            (0, 9),
        )

    def test_collinear_point_removed(self):
        # (2, 1) sits on the segment from (4, 0) to (0, 2)
        ideal = monomial_ideal((4, 0), (2, 1), (0, 2))
        assert newton_vertices(ideal).vertices == ((4, 0), (0, 2))

    def test_unit_rejected(self):
        with pytest.raises(NotMPrimary):
            newton_vertices(MonomialIdeal(((0, 0),)))

    @given(random_ideals())
    def test_vertices_are_generators(self, ideal):
        assert set(newton_vertices(ideal).vertices) <= set(ideal.gens)


class TestClosure:
    def test_fills_under_the_hull(self):
        assert closure(monomial_ideal((3, 0), (0, 2))).gens == (
            (3, 0),
            (2, 1),
            (0, 2),
        )

    def test_already_closed(self):
        assert closure(STAIR_A) == STAIR_A

    @given(random_ideals())
    def test_idempotent_and_extensive(self, ideal):
        cl = closure(ideal)
        assert closure(cl) == cl
        assert cl.contains(ideal)
        assert cl.order() == ideal.order()

    @given(random_ideals())
    @settings(max_examples=50)
    def test_minimal_among_hull_points(self, ideal):
        # nothing strictly under the hull sneaks in
        cl = closure(ideal)
        verts = newton_vertices(ideal).vertices
        for (p0, q0), (p1, q1) in zip(verts, verts[1:]):
            a, b = q1 - q0, p0 - p1
            c = a * p0 + b * q0
            for u, v in cl.gens:
                assert a * u + b * v >= c

    def test_is_complete(self):
        assert not is_complete(monomial_ideal((3, 0), (0, 2)))
        assert is_complete(STAIR_A)
        assert is_complete(STAIR_B)


class TestSimpleFactors:
    def test_primitive_pair_required(self):
        with pytest.raises(ValueError):
            SimpleFactor(2, 4)
        with pytest.raises(ValueError):
            SimpleFactor(0, 1)

    def test_order(self):
        assert SimpleFactor(3, 2).order == 2

    def test_simple_ideal_is_simple(self):
        assert is_simple(simple_ideal(SimpleFactor(2, 3)))
        assert is_simple(simple_ideal(SimpleFactor(1, 4)))
        assert not is_simple(monomial_ideal((2, 0), (1, 1), (0, 2)))


class TestFactorization:
    def test_stair_a(self):
        assert zariski_factor(STAIR_A).as_dict() == {
            SimpleFactor(2, 3): 1,
            SimpleFactor(3, 4): 1,
        }

    def test_stair_b(self):
        assert zariski_factor(STAIR_B).as_dict() == {
            SimpleFactor(1, 1): 1,
            SimpleFactor(1, 2): 1,
            SimpleFactor(1, 4): 1,
            SimpleFactor(2, 1): 2,
        }

    def test_rejects_non_complete(self):
        with pytest.raises(NotComplete):
            zariski_factor(monomial_ideal((3, 0), (0, 2)))

    def test_total_order_matches(self, small_complete):
        for ideal in small_complete:
            assert zariski_factor(ideal).total_order() == ideal.order()

    def test_round_trip(self, small_complete):
        for ideal in small_complete:
            assert reconstruct(zariski_factor(ideal)) == ideal

    def test_multiset_operations(self):
        f = Factorization.from_counts({SimpleFactor(1, 1): 2, SimpleFactor(2, 3): 1})
        assert f.multiplicity(SimpleFactor(1, 1)) == 2
        removed = f.remove(SimpleFactor(1, 1))
        assert removed.multiplicity(SimpleFactor(1, 1)) == 1
        with pytest.raises(ValueError):
            f.remove(SimpleFactor(5, 1))

    def test_simple_divides(self):
        assert simple_divides(SimpleFactor(2, 3), STAIR_A)
        assert not simple_divides(SimpleFactor(1, 1), STAIR_A)

    def test_factor_of_product_is_union(self, small_complete):
        for left in small_complete[:12]:
            for right in small_complete[:12]:
                combined = zariski_factor(left * right).as_dict()
                expected: dict[SimpleFactor, int] = dict(zariski_factor(left).as_dict())
                for sf, m in zariski_factor(right).as_dict().items():
                    expected[sf] = expected.get(sf, 0) + m
                assert combined == expected
