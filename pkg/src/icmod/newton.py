"""Newton polygon, integral closure and unique factorization of complete
monomial ideals.

Everything here is integer arithmetic on staircase corners: the lower-left
hull is computed with a monotone chain over exact cross products, and the
closure fills in, for each x-exponent, the least y-exponent satisfying every
hull-edge half-plane inequality.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import NotComplete, NotMPrimary
from .staircase import Monomial, MonomialIdeal, normalize


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower-left hull vertices (p_0,0), ..., (0,q_t), sorted by p descending."""

    vertices: tuple[Monomial, ...]


@dataclass(frozen=True, order=True)
class SimpleFactor:
    """Exponent pair of a simple complete ideal, the closure of (x^p, y^q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"not a primitive exponent pair: {(self.p, self.q)}")

    @property
    def order(self) -> int:
        return min(self.p, self.q)


@dataclass(frozen=True)
class Factorization:
    """Multiset of simple factors with multiplicities, canonically sorted."""

    factors: tuple[tuple[SimpleFactor, int], ...]

    @staticmethod
    def from_counts(counts: dict[SimpleFactor, int]) -> "Factorization":
        items = sorted(counts.items(), key=lambda fm: (-fm[0].p, fm[0].q))
        return Factorization(tuple((f, m) for f, m in items if m > 0))

    def as_dict(self) -> dict[SimpleFactor, int]:
        return dict(self.factors)

    def total_order(self) -> int:
        return sum(m * f.order for f, m in self.factors)

    def multiplicity(self, f: SimpleFactor) -> int:
        return self.as_dict().get(f, 0)

    def remove(self, f: SimpleFactor) -> "Factorization":
        counts = Counter(self.as_dict())
        if counts[f] < 1:
            raise ValueError(f"{f} is not a factor")
        counts[f] -= 1
        return Factorization.from_counts(counts)


def _cross(o: Monomial, a: Monomial, b: Monomial) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (b[0] - o[0]) * (a[1] - o[1])


def newton_vertices(ideal: MonomialIdeal) -> NewtonPolygon:
    """Vertices of the lower-left convex hull of the staircase corners."""
    if ideal.is_unit:
        raise NotMPrimary("the unit ideal has no Newton polygon")
    pts = sorted(ideal.gens)
    hull: list[Monomial] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return NewtonPolygon(tuple(reversed(hull)))


def _edges(np_: NewtonPolygon) -> list[tuple[int, int, int]]:
    """Half-plane data (A, B, C) with A*u + B*v >= C on the polyhedron."""
    out = []
    for (p0, q0), (p1, q1) in zip(np_.vertices, np_.vertices[1:]):
        a = q1 - q0
        b = p0 - p1
        out.append((a, b, a * p0 + b * q0))
    return out


def closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Integral closure: the ideal of all lattice points inside the polygon."""
    if ideal.is_unit:
        return ideal
    np_ = newton_vertices(ideal)
    edges = _edges(np_)
    gens = []
    for u in range(ideal.a0 + 1):
        v = 0
        for a, b, c in edges:
            need = c - a * u
            if need > 0:
                v = max(v, -((-need) // b))
        gens.append((u, v))
    return normalize(gens)


def is_complete(ideal: MonomialIdeal) -> bool:
    return closure(ideal) == ideal


def zariski_factor(ideal: MonomialIdeal) -> Factorization:
    """Unique decomposition of a complete ideal into simple factors.

    Each hull edge of lattice width dp and height dq contributes the simple
    factor (dp/d, dq/d) with multiplicity d = gcd(dp, dq).
    """
    if not is_complete(ideal):
        raise NotComplete(f"{ideal} is not integrally closed")
    counts: Counter[SimpleFactor] = Counter()
    np_ = newton_vertices(ideal)
    for (p0, q0), (p1, q1) in zip(np_.vertices, np_.vertices[1:]):
        dp, dq = p0 - p1, q1 - q0
        d = math.gcd(dp, dq)
        counts[SimpleFactor(dp // d, dq // d)] += d
    return Factorization.from_counts(counts)


def simple_ideal(f: SimpleFactor) -> MonomialIdeal:
    """The simple complete ideal attached to a primitive pair: closure of (x^p, y^q)."""
    return closure(normalize([(f.p, 0), (0, f.q)]))


def reconstruct(factorization: Factorization) -> MonomialIdeal:
    """Product of the simple closures; inverse of zariski_factor."""
    if not factorization.factors:
        raise ValueError("empty factorization")
    result: MonomialIdeal | None = None
    for f, mult in factorization.factors:
        piece = simple_ideal(f).power(mult)
        result = piece if result is None else result.product(piece)
    return result  # type: ignore[return-value]


def simple_divides(f: SimpleFactor, ideal: MonomialIdeal) -> bool:
    """Whether the simple ideal of f appears in the Zariski decomposition.

    Sound for complete ideals because the decomposition is unique.
    """
    return zariski_factor(ideal).multiplicity(f) >= 1


def is_simple(ideal: MonomialIdeal) -> bool:
    factors = zariski_factor(ideal).factors
    return len(factors) == 1 and factors[0][1] == 1
