"""Rank-2 module presentations attached to a staircase ideal.

A presentation is a 2 x m matrix whose entries are single monomials with
coefficient 1 (or empty).  The distinguished family M_k consists of the
columns (x^{a_i-1} y^{b_i}, 0) for i < r followed by (y^k, x) and
(0, y^{b_r-k}); its Fitting ideals stay monomial, which is what the minor
rule below enforces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import KOutOfRange, NonMonomialMinor, NotMPrimary
from .staircase import Monomial, MonomialIdeal, normalize

Entry = Monomial | None
Column = tuple[Entry, Entry]


@dataclass(frozen=True)
class Presentation2:
    """Columns of a 2 x m matrix of optional monomials spanning M inside R^2."""

    cols: tuple[Column, ...]
    source: MonomialIdeal | None = field(default=None, compare=False)
    k: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.cols:
            raise ValueError("a presentation needs at least one column")
        if any(top is None and bot is None for top, bot in self.cols):
            raise ValueError("all-empty column")

    def transpose_xy(self) -> "Presentation2":
        """Swap the roles of x and y (entry exponents and the two rows)."""

        def sw(e: Entry) -> Entry:
            return None if e is None else (e[1], e[0])

        return Presentation2(tuple((sw(bot), sw(top)) for top, bot in self.cols))

    def permuted(self, order: list[int]) -> "Presentation2":
        return Presentation2(tuple(self.cols[i] for i in order))


def build_Mk(ideal: MonomialIdeal, k: int) -> Presentation2:
    """The 2 x (r+2) presentation of M_k(I); requires 1 <= k < b_r and r >= 1."""
    if ideal.is_unit or ideal.r < 1:
        raise NotMPrimary("M_k needs a proper m-primary ideal with r >= 1")
    br = ideal.br
    if not 1 <= k < br:
        raise KOutOfRange(f"k={k} outside 1 <= k < b_r={br}")
    cols: list[Column] = []
    for a, b in ideal.gens[:-1]:
        cols.append(((a - 1, b), None))
    cols.append(((0, k), (1, 0)))
    cols.append((None, (0, br - k)))
    return Presentation2(tuple(cols), source=ideal, k=k)


def _mul(m1: Monomial, m2: Monomial) -> Monomial:
    return (m1[0] + m2[0], m1[1] + m2[1])


def fitting0(pres: Presentation2) -> MonomialIdeal:
    """Ideal of all 2x2 minors, which must each be zero or a single monomial."""
    gens: list[Monomial] = []
    cols = pres.cols
    for i in range(len(cols)):
        ti, bi = cols[i]
        for j in range(i + 1, len(cols)):
            tj, bj = cols[j]
            m1 = _mul(ti, bj) if ti is not None and bj is not None else None
            m2 = _mul(tj, bi) if tj is not None and bi is not None else None
            if m1 is not None and m2 is not None:
                if m1 != m2:
                    raise NonMonomialMinor(
                        f"minor of columns {i},{j} is a binomial: "
                        f"x^{m1[0]}y^{m1[1]} - x^{m2[0]}y^{m2[1]}"
                    )
                continue  # the two terms cancel
            m = m1 if m1 is not None else m2
            if m is not None:
                gens.append(m)
    if not gens:
        raise NotMPrimary("all 2x2 minors vanish; Fitt_0 is the zero ideal")
    return normalize(gens)


def fitting1(pres: Presentation2) -> MonomialIdeal:
    """Ideal generated by all nonzero matrix entries."""
    gens = [e for col in pres.cols for e in col if e is not None]
    return normalize(gens)


def ell_value(ideal: MonomialIdeal, k: int) -> int:
    """min{b_{r-1}, k, b_r - k}, the y-exponent of Fitt_1(M_k)."""
    br = ideal.br
    if not 1 <= k < br:
        raise KOutOfRange(f"k={k} outside 1 <= k < b_r={br}")
    return min(ideal.bvec[-2], k, br - k)


def lemma33_holds(ideal: MonomialIdeal, k: int) -> bool:
    """b_i + b_r - k >= b_{i+1} for all i; guarantees Fitt_0(M_k) = I."""
    b = ideal.bvec
    br = b[-1]
    if not 1 <= k < br:
        raise KOutOfRange(f"k={k} outside 1 <= k < b_r={br}")
    return all(b[i] + br - k >= b[i + 1] for i in range(len(b) - 1))


class ContractionCase(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    NEITHER = "Neither"


def remark34_case(ideal: MonomialIdeal, k: int) -> ContractionCase:
    """Which of the two easy sufficient conditions for Fitt_0(M_k) = I applies."""
    b = ideal.bvec
    r = ideal.r
    br = b[-1]
    if not 1 <= k < br:
        raise KOutOfRange(f"k={k} outside 1 <= k < b_r={br}")
    if k <= r - 1:
        return ContractionCase.CASE1
    gap = br - b[-2]
    if r <= k <= b[-2] and all(b[i + 1] - b[i] <= gap for i in range(len(b) - 1)):
        return ContractionCase.CASE2
    return ContractionCase.NEITHER


def contracted_numeric(pres: Presentation2) -> bool:
    """Numeric contractedness test: mu(M) = ord(Fitt_0) + rank."""
    from .oracle import module_min_gens

    return module_min_gens(pres) == fitting0(pres).order() + 2
