"""Independent brute-force oracles.

Lengths and minimal generator counts are computed by exact rational Gaussian
elimination over truncations R^2 / m^N R^2 (resp. R / m^N).  Soundness of the
truncation comes from Fitt_0(F/M) * F being contained in M: once m^N lands in
the Fitting ideal, the quotient no longer changes, and every result is
re-checked at N+1 before being returned.

The integral-closure oracle here deliberately avoids the Newton polygon: it
tests membership of powers m^n in I^n, which is what the closure machinery is
validated against.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InternalInconsistency, NotFiniteColength, NotMPrimary
from .newton import Factorization, SimpleFactor, reconstruct
from .presentation import Presentation2, fitting0
from .staircase import Monomial, MonomialIdeal

# polynomial term: (coefficient, x-exponent, y-exponent)
Term = tuple[int, int, int]
Poly = Sequence[Term]


def truncation_margin() -> int:
    raw = os.environ.get("ICM_TRUNCATION_MARGIN", "2")
    try:
        margin = int(raw)
    except ValueError as exc:
        raise ValueError(f"ICM_TRUNCATION_MARGIN must be an integer, got {raw!r}") from exc
    if margin < 0:
        raise ValueError(f"ICM_TRUNCATION_MARGIN must be >= 0, got {margin}")
    return margin


class TruncationSpace:
    """Index map for monomial basis vectors of rank coordinates, degree < N."""

    def __init__(self, n: int, rank: int = 2):
        if n < 1:
            raise ValueError("truncation degree must be >= 1")
        self.n = n
        self.rank = rank
        self.block = n * (n + 1) // 2
        self.dim = rank * self.block
        self._index: dict[tuple[int, int, int], int] = {}
        pos = 0
        for coord in range(rank):
            for deg in range(n):
                for c in range(deg + 1):
                    self._index[(coord, c, deg - c)] = pos
                    pos += 1

    def index(self, coord: int, c: int, d: int) -> int | None:
        return self._index.get((coord, c, d))


def _rank(rows: Iterable[dict[int, Fraction]]) -> int:
    """Rank of a sparse row collection by fraction-free-ish elimination."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        work = dict(row)
        while work:
            lead = max(work)
            pivot = pivots.get(lead)
            if pivot is None:
                coef = work[lead]
                if coef != 1:
                    inv = Fraction(1, 1) / coef
                    work = {c: v * inv for c, v in work.items()}
                pivots[lead] = work
                break
            coef = work.pop(lead)
            for c, v in pivot.items():
                if c == lead:
                    continue
                nv = work.get(c, 0) - coef * v
                if nv:
                    work[c] = nv
                else:
                    work.pop(c, None)
    return len(pivots)


def _module_rows(
    pres: Presentation2, space: TruncationSpace, min_mult_degree: int
) -> Iterator[dict[int, Fraction]]:
    """Rows spanning (monomial multiples of the columns) inside the truncation."""
    n = space.n
    for top, bot in pres.cols:
        low = min(e[0] + e[1] for e in (top, bot) if e is not None)
        for deg in range(min_mult_degree, n - low):
            for c in range(deg + 1):
                d = deg - c
                row: dict[int, Fraction] = {}
                for coord, entry in ((0, top), (1, bot)):
                    if entry is None:
                        continue
                    idx = space.index(coord, entry[0] + c, entry[1] + d)
                    if idx is not None:
                        row[idx] = Fraction(1)
                if row:
                    yield row


def _fitting0_for_oracle(pres: Presentation2) -> MonomialIdeal:
    try:
        return fitting0(pres)
    except NotMPrimary as exc:
        raise NotFiniteColength(str(exc)) from exc


def module_colength(pres: Presentation2) -> int:
    """Length of R^2 / M, computed in a truncation and re-checked at N+1."""
    ideal = _fitting0_for_oracle(pres)
    base = max(1, ideal.a0 + ideal.br)

    def value(n: int) -> int:
        space = TruncationSpace(n)
        return space.dim - _rank(_module_rows(pres, space, 0))

    got = value(base)
    if got != value(base + 1):
        raise InternalInconsistency(
            f"module colength unstable between truncations {base} and {base + 1}"
        )
    return got


def module_min_gens(pres: Presentation2) -> int:
    """Minimal number of generators, as dim of M / mM in a truncation."""
    ideal = _fitting0_for_oracle(pres)
    base = max(1, ideal.a0 + ideal.br + truncation_margin())

    def value(n: int) -> int:
        space = TruncationSpace(n)
        full = _rank(_module_rows(pres, space, 0))
        shifted = _rank(_module_rows(pres, space, 1))
        return full - shifted

    got = value(base)
    if got != value(base + 1):
        raise InternalInconsistency(
            f"minimal generator count unstable between truncations {base} and {base + 1}"
        )
    return got


def _poly_rows(polys: Sequence[Poly], space: TruncationSpace) -> Iterator[dict[int, Fraction]]:
    n = space.n
    for poly in polys:
        if not poly:
            continue
        low = min(a + b for _, a, b in poly)
        for deg in range(n - low):
            for c in range(deg + 1):
                d = deg - c
                row: dict[int, Fraction] = {}
                for coef, a, b in poly:
                    idx = space.index(0, a + c, b + d)
                    if idx is not None:
                        row[idx] = row.get(idx, Fraction(0)) + coef
                row = {i: v for i, v in row.items() if v}
                if row:
                    yield row


_POLY_TRUNCATION_CAP = 64


def poly_ideal_colength(gens: Sequence[Poly]) -> int:
    """Length of R / (gens) for sparse polynomial generators, e.g. with x+y."""
    if not gens or all(not g for g in gens):
        raise NotFiniteColength("no generators")

    def value(n: int) -> int:
        space = TruncationSpace(n, rank=1)
        return space.dim - _rank(_poly_rows(gens, space))

    n = max(a + b for g in gens for _, a, b in g) + 2
    while n <= _POLY_TRUNCATION_CAP:
        got = value(n)
        if got == value(n + 1):
            return got
        n = max(n + 2, 2 * n - n // 2)
    raise NotFiniteColength(
        f"colength did not stabilize below truncation degree {_POLY_TRUNCATION_CAP}"
    )


def ideal_as_polys(ideal: MonomialIdeal) -> list[Poly]:
    return [[(1, a, b)] for a, b in ideal.gens]


def closure_power_oracle(m: Monomial, ideal: MonomialIdeal, n_max: int) -> bool:
    """Whether m^n lies in I^n for some n <= n_max (power membership test)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    u, v = m
    power = ideal
    for n in range(1, n_max + 1):
        if power.member((n * u, n * v)):
            return True
        if n < n_max:
            power = power.product(ideal)
    return False


def _primitive_pairs(bound_a: int, bound_b: int) -> list[SimpleFactor]:
    import math

    pairs = [
        SimpleFactor(p, q)
        for p in range(1, bound_a + 1)
        for q in range(1, bound_b + 1)
        if math.gcd(p, q) == 1
    ]
    return sorted(pairs, key=lambda f: (f.p, f.q))


def enumerate_complete(bound_a: int, bound_b: int) -> Iterator[MonomialIdeal]:
    """All complete m-primary monomial ideals with a_0 <= bound_a, b_r <= bound_b.

    A complete ideal is a product of simple closures, and the exponents of a
    product add, so the enumeration walks multisets of primitive pairs whose
    componentwise sums stay within the bounds.
    """
    if bound_a < 1 or bound_b < 1:
        raise ValueError("bounds must be >= 1")
    pairs = _primitive_pairs(bound_a, bound_b)
    found: list[MonomialIdeal] = []

    def walk(start: int, counts: dict[SimpleFactor, int], sum_p: int, sum_q: int):
        if counts:
            found.append(reconstruct(Factorization.from_counts(dict(counts))))
        for i in range(start, len(pairs)):
            f = pairs[i]
            if sum_p + f.p > bound_a or sum_q + f.q > bound_b:
                continue
            counts[f] = counts.get(f, 0) + 1
            walk(i, counts, sum_p + f.p, sum_q + f.q)
            counts[f] -= 1
            if not counts[f]:
                del counts[f]

    walk(0, {}, 0, 0)
    found.sort(key=lambda ideal: (ideal.a0, ideal.br, ideal.gens))
    seen = set()
    for ideal in found:
        if ideal.gens in seen:
            raise InternalInconsistency("duplicate ideal in enumeration")
        seen.add(ideal.gens)
        yield ideal
