"""Exact arithmetic on m-primary monomial ideals in two variables.

An ideal is stored as its staircase: the antichain of minimal generator
exponent pairs (a, b) for x^a y^b, sorted by strictly decreasing a (hence
strictly increasing b).  All values are immutable and every operation is a
pure function, so they can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotMPrimary

Monomial = tuple[int, int]


def _minimal_antichain(points: Iterable[Monomial]) -> list[Monomial]:
    """Drop every point coordinatewise-dominated by another; sort by a desc."""
    best: dict[int, int] = {}
    for a, b in points:
        if a < 0 or b < 0 or a != int(a) or b != int(b):
            raise ValueError(f"exponents must be nonnegative integers, got {(a, b)}")
        cur = best.get(a)
        if cur is None or b < cur:
            best[a] = b
    out: list[Monomial] = []
    min_b: int | None = None
    # ascending a: a point survives only if no smaller-a point has smaller b
    for a in sorted(best):
        b = best[a]
        if min_b is None or b < min_b:
            out.append((int(a), int(b)))
            min_b = b
    out.reverse()
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Canonical antichain of staircase corners of an m-primary monomial ideal.

    The unit ideal is representable as gens == ((0, 0),) for internal use in
    factor reconstruction; operations that need a proper ideal reject it.
    """

    gens: tuple[Monomial, ...]

    @property
    def r(self) -> int:
        return len(self.gens) - 1

    @property
    def a0(self) -> int:
        return self.gens[0][0]

    @property
    def br(self) -> int:
        return self.gens[-1][1]

    @property
    def avec(self) -> tuple[int, ...]:
        return tuple(g[0] for g in self.gens)

    @property
    def bvec(self) -> tuple[int, ...]:
        return tuple(g[1] for g in self.gens)

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0, 0),)

    def member(self, m: Monomial) -> bool:
        u, v = m
        return any(a <= u and b <= v for a, b in self.gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        return all(self.member(g) for g in other.gens)

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        gens = [(a + c, b + d) for a, b in self.gens for c, d in other.gens]
        return normalize(gens)

    __mul__ = product

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return normalize(list(self.gens) + list(other.gens))

    __add__ = sum

    def power(self, n: int) -> "MonomialIdeal":
        if n < 1:
            raise ValueError(f"power exponent must be >= 1, got {n}")
        result: MonomialIdeal | None = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result.product(base)
            n >>= 1
            if not n:
                return result  # type: ignore[return-value]
            base = base.product(base)

    __pow__ = power

    def transpose(self) -> "MonomialIdeal":
        return normalize([(b, a) for a, b in self.gens])

    def order(self) -> int:
        return min(a + b for a, b in self.gens)

    def num_min_gens(self) -> int:
        return len(self.gens)

    def colength(self) -> int:
        """Number of lattice points strictly under the staircase."""
        total = 0
        for (a_i, _), (a_next, b_next) in zip(self.gens, self.gens[1:]):
            total += (a_i - a_next) * b_next
        return total

    def min_y_exponents(self) -> list[int]:
        """For u in 0..a0-1, the least v with x^u y^v in the ideal."""
        # column u lies in [a_{i+1}, a_i) and has height b_{i+1}
        heights = [0] * self.a0
        for (a_i, _), (a_next, b_next) in zip(self.gens, self.gens[1:]):
            for u in range(a_next, a_i):
                heights[u] = b_next
        return heights

    def __str__(self) -> str:
        from .expr import format_ideal

        return format_ideal(self)


def normalize(raw: Iterable[Monomial]) -> MonomialIdeal:
    """Canonicalize a generating set; reject sets that are not m-primary."""
    gens = _minimal_antichain(raw)
    if not gens:
        raise NotMPrimary("empty generating set")
    if gens[0][1] != 0:
        raise NotMPrimary("no pure x-power among the generators")
    if gens[-1][0] != 0:
        raise NotMPrimary("no pure y-power among the generators")
    return MonomialIdeal(tuple(gens))


UNIT = MonomialIdeal(((0, 0),))


def monomial_ideal(*gens: Monomial) -> MonomialIdeal:
    """Convenience constructor: monomial_ideal((2, 0), (1, 1), (0, 2))."""
    return normalize(gens)
