"""Decision procedure: classify a complete monomial ideal, pick the module
parameter k, verify every side condition and emit a machine-checkable
certificate of indecomposability.

The dispatch mirrors the case analysis of the underlying theory:

* no simple factor of order one  -> any k in 1..r-1 works (default 1);
* some (x, y^l) missing from the factorization (Case I) -> k is the least
  such l, unless the extra condition fails, which happens for exactly four
  exceptional factorization patterns (N1..N4) with their own k;
* all (x, y^l), l < r, divide the ideal (Case II) -> the residual order-one
  factor decides between k = r-2, 3, r or r+1;
* order 2 with xy not in I -> k = 1; order 2 with xy in I is open; order <= 1
  is out of scope.

A certificate records the branch, k, the presentation matrix and a list of
named boolean checks; the verdict is IndecomposableByPaper only when every
check re-derives to true.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    FittingMismatch,
    InternalInconsistency,
    KOutOfRange,
    NotComplete,
)
from .newton import (
    Factorization,
    SimpleFactor,
    is_complete,
    reconstruct,
    simple_ideal,
    zariski_factor,
)
from .presentation import Presentation2, build_Mk, ell_value, fitting0, fitting1
from .staircase import MonomialIdeal, normalize


class Branch(enum.Enum):
    NO_ORDER1_FACTOR = "NoOrder1Factor"
    CASE_I = "CaseI"
    N1 = "N1"
    N2 = "N2"
    N3 = "N3"
    N4 = "N4"
    CASE_II_1 = "CaseII1"
    CASE_II_2 = "CaseII2"
    R2_SIMPLE = "R2Simple"
    R2_SPLIT = "R2Split"
    R2_OPEN = "R2Open"
    NOT_COVERED = "NotCovered"


class Verdict(enum.Enum):
    INDECOMPOSABLE = "IndecomposableByPaper"
    OPEN = "OpenPerPaper"
    NOT_COVERED = "NotCovered"
    # for user-forced k outside the ranges the theory settles
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Classification:
    branch: Branch
    k0: int | None = None
    alpha: int | None = None
    beta: int | None = None


@dataclass(frozen=True)
class Certificate:
    input: MonomialIdeal
    closed_input: MonomialIdeal | None
    transposed: bool
    ideal: MonomialIdeal  # oriented working ideal
    order: int
    factorization: Factorization | None
    branch: Branch
    k: int | None
    matrix: Presentation2 | None
    checks: tuple[tuple[str, bool], ...]
    verdict: Verdict
    forced_k: bool = field(default=False)

    def check(self, name: str) -> bool | None:
        for n, ok in self.checks:
            if n == name:
                return ok
        return None


def _xy_factor(ell: int) -> SimpleFactor:
    return SimpleFactor(1, ell)


def orient(ideal: MonomialIdeal) -> tuple[MonomialIdeal, bool]:
    """Flip to a_0 <= b_r; on ties pick the lexicographically smaller staircase.

    The tie rule keeps the whole procedure invariant under swapping x and y.
    """
    flipped = ideal.transpose()
    if ideal.a0 > ideal.br:
        return flipped, True
    if ideal.a0 == ideal.br and flipped.gens < ideal.gens:
        return flipped, True
    return ideal, False


_N_PATTERNS = {
    Branch.N2: Factorization.from_counts(
        {SimpleFactor(1, 1): 3, SimpleFactor(1, 2): 1}
    ),
    Branch.N3: Factorization.from_counts(
        {SimpleFactor(1, 1): 2, SimpleFactor(1, 2): 1, SimpleFactor(2, 1): 1}
    ),
    Branch.N4: Factorization.from_counts(
        {SimpleFactor(1, 1): 1, SimpleFactor(1, 2): 1, SimpleFactor(3, 2): 1}
    ),
}


def _match_n1(factorization: Factorization) -> tuple[int, int] | None:
    """Match (x,y)(x^alpha,y)(x,y^beta) with beta >= alpha > 0; return (alpha, beta)."""
    counts = dict(factorization.as_dict())
    if sum(counts.values()) != 3:
        return None
    if counts.get(SimpleFactor(1, 1), 0) < 1:
        return None
    counts[SimpleFactor(1, 1)] -= 1
    rest = [f for f, m in counts.items() for _ in range(m)]
    assert len(rest) == 2
    for first, second in (rest, rest[::-1]):
        if first.q == 1 and second.p == 1 and second.q >= first.p:
            return first.p, second.q
    return None


def classify(ideal: MonomialIdeal) -> Classification:
    """Branch dispatch for a complete, normalized, oriented ideal."""
    if not is_complete(ideal):
        raise NotComplete(f"{ideal} is not integrally closed")
    r = ideal.order()
    if r <= 1:
        return Classification(Branch.NOT_COVERED)
    if ideal.r != r:
        raise InternalInconsistency(
            f"complete ideal with mu != ord + 1: {ideal}"
        )
    if r == 2:
        if ideal.member((1, 1)):
            return Classification(Branch.R2_OPEN)
        b1, b2 = ideal.bvec[1], ideal.bvec[2]
        branch = Branch.R2_SIMPLE if b2 < 2 * b1 else Branch.R2_SPLIT
        return Classification(branch)
    if ideal.avec[-2] != 1:
        raise InternalInconsistency(
            f"oriented complete ideal of order >= 3 with a_(r-1) != 1: {ideal}"
        )
    factorization = zariski_factor(ideal)
    if all(f.order > 1 for f, _ in factorization.factors):
        return Classification(Branch.NO_ORDER1_FACTOR)
    missing = [
        ell
        for ell in range(1, r)
        if factorization.multiplicity(_xy_factor(ell)) < 1
    ]
    if missing:
        k0 = missing[0]
        if _condition_fk(ideal, k0):
            return Classification(Branch.CASE_I, k0=k0)
        match = _match_n1(factorization)
        if match is not None:
            return Classification(Branch.N1, k0=k0, alpha=match[0], beta=match[1])
        for branch, pattern in _N_PATTERNS.items():
            if factorization == pattern:
                return Classification(branch, k0=k0)
        raise InternalInconsistency(
            f"Case I extra condition fails but no exceptional pattern matches: {ideal}"
        )
    # Case II: strip one copy of each (x, y^l), l = 1..r-1; one order-1 factor is left
    residual = factorization
    for ell in range(1, r):
        residual = residual.remove(_xy_factor(ell))
    rest = [f for f, m in residual.factors for _ in range(m)]
    if len(rest) != 1 or rest[0].order != 1:
        raise InternalInconsistency(
            f"Case II residual is not a single order-one factor: {ideal}"
        )
    piece = rest[0]
    if piece.q == 1:
        return Classification(Branch.CASE_II_1, alpha=piece.p)
    return Classification(Branch.CASE_II_2, beta=piece.q)


def _condition_fk(ideal: MonomialIdeal, k: int) -> bool:
    """Fitt_1(M_k) = (x, y^k) and x y^k not in I."""
    return ell_value(ideal, k) == k and not ideal.member((1, k))


def sufficient_indecomposable(
    ideal: MonomialIdeal, k: int
) -> tuple[bool, str]:
    """Direct sufficient test for indecomposability of M_k.

    True when the ideal has no simple factor of order one, or when
    x y^l is outside I and (x, y^l) is not a Zariski factor, where
    l = min{b_{r-1}, k, b_r - k}.  False is inconclusive.
    """
    if not is_complete(ideal):
        raise NotComplete(f"{ideal} is not integrally closed")
    matrix = build_Mk(ideal, k)  # raises KOutOfRange
    if fitting0(matrix) != ideal:
        raise FittingMismatch(f"Fitt_0(M_{k}) != I for {ideal}")
    factorization = zariski_factor(ideal)
    if all(f.order > 1 for f, _ in factorization.factors):
        return True, "no simple factor of order one"
    ell = ell_value(ideal, k)
    if not ideal.member((1, ell)) and factorization.multiplicity(_xy_factor(ell)) < 1:
        return True, f"x*y^{ell} not in I and (x, y^{ell}) is not a factor"
    return False, "inconclusive"


def _default_k(cls: Classification, r: int) -> int | None:
    branch = cls.branch
    if branch == Branch.NO_ORDER1_FACTOR:
        return 1
    if branch == Branch.CASE_I:
        return cls.k0
    if branch in (Branch.N1, Branch.N2, Branch.N3):
        return r - 2
    if branch == Branch.N4:
        return 2
    if branch == Branch.CASE_II_1:
        if r == 3:
            return 1
        if r == 4:
            return 3
        return r
    if branch == Branch.CASE_II_2:
        if r == 3:
            return 2
        return r if cls.beta != r else r + 1
    if branch in (Branch.R2_SIMPLE, Branch.R2_SPLIT):
        return 1
    return None


def valid_k_set(cls: Classification, r: int) -> list[int]:
    """All k the theory certifies for this branch."""
    if cls.branch == Branch.NO_ORDER1_FACTOR:
        return list(range(1, r))
    default = _default_k(cls, r)
    return [default] if default is not None else []


def _length_refutation(
    ideal: MonomialIdeal,
    matrix: Presentation2,
    factorization: Factorization,
    ell: int,
) -> bool:
    """Refute the only decomposition shape allowed when x y^l is outside I.

    A splitting would force M_k = (x, y^l) + J with (x, y^l) * J = I, so the
    module length would equal the sum of the two ideal colengths; comparing
    against the true length (from the truncation oracle) decides it.
    """
    from .oracle import module_colength

    partner = reconstruct(factorization.remove(_xy_factor(ell)))
    split_length = simple_ideal(_xy_factor(ell)).colength() + partner.colength()
    return module_colength(matrix) != split_length


def _indecomposability_checks(
    ideal: MonomialIdeal,
    matrix: Presentation2,
    factorization: Factorization,
    k: int,
) -> tuple[list[tuple[str, bool]], bool]:
    """The clause chain of the splitting obstruction, as named checks."""
    checks: list[tuple[str, bool]] = []
    if all(f.order > 1 for f, _ in factorization.factors):
        checks.append(("no_order_one_factor", True))
        return checks, True
    ell = ell_value(ideal, k)
    if ell < 1:
        checks.append(("fitting1_has_positive_y_exponent", False))
        return checks, False
    xy_out = not ideal.member((1, ell))
    checks.append((f"xy^{ell}_not_in_ideal", xy_out))
    if not xy_out:
        return checks, False
    if factorization.multiplicity(_xy_factor(ell)) < 1:
        checks.append((f"(x,y^{ell})_not_a_factor", True))
        return checks, True
    ok = _length_refutation(ideal, matrix, factorization, ell)
    checks.append(("length_refutes_splitting", ok))
    return checks, ok


def _pattern_check(
    cls: Classification, ideal: MonomialIdeal, r: int
) -> tuple[str, bool] | None:
    """Branch-specific shape of the factorization, re-derived from scratch."""
    m = normalize([(1, 0), (0, 1)])
    if cls.branch in (Branch.N1, Branch.N2, Branch.N3):
        alpha, beta = _exceptional_pattern_parameters(cls, ideal, r)
        expected = (
            m.power(r - 2)
            * normalize([(alpha, 0), (0, 1)])
            * normalize([(1, 0), (0, beta)])
        )
        return (f"matches_(x,y)^{r - 2}(x^{alpha},y)(x,y^{beta})", expected == ideal)
    if cls.branch == Branch.N4:
        from .newton import closure

        expected = m * normalize([(1, 0), (0, 2)]) * closure(normalize([(3, 0), (0, 2)]))
        return ("matches_(x,y)(x,y^2)cl(x^3,y^2)", expected == ideal)
    if cls.branch in (Branch.CASE_II_1, Branch.CASE_II_2):
        expected = m
        for ell in range(2, r):
            expected = expected * normalize([(1, 0), (0, ell)])
        if cls.branch == Branch.CASE_II_1:
            tail = normalize([(cls.alpha, 0), (0, 1)])
            name = f"matches_(x,y)..(x,y^{r - 1})(x^{cls.alpha},y)"
        else:
            tail = normalize([(1, 0), (0, cls.beta)])
            name = f"matches_(x,y)..(x,y^{r - 1})(x,y^{cls.beta})"
        return (name, expected * tail == ideal)
    return None


def _exceptional_pattern_parameters(
    cls: Classification, ideal: MonomialIdeal, r: int
) -> tuple[int, int]:
    """(alpha, beta) of the pattern (x,y)^{r-2}(x^alpha,y)(x,y^beta)."""
    if cls.branch == Branch.N1:
        assert cls.alpha is not None and cls.beta is not None
        return cls.alpha, cls.beta
    if cls.branch == Branch.N2:  # (x,y)^3 (x,y^2) = (x,y)^{r-2} (x,y) (x,y^2)
        return 1, 2
    if cls.branch == Branch.N3:  # (x,y)^2 (x,y^2)(x^2,y) = (x,y)^{r-2} (x^2,y)(x,y^2)
        return 2, 2
    raise ValueError(cls.branch)


def choose_k(
    ideal: MonomialIdeal,
    forced_k: int | None = None,
    close_first: bool = False,
) -> Certificate:
    """Run the full decision procedure and emit a certificate."""
    original = ideal
    closed: MonomialIdeal | None = None
    if close_first:
        from .newton import closure

        closed = closure(ideal)
        working = closed
        if closed == ideal:
            closed = None
            working = ideal
    else:
        if not is_complete(ideal):
            raise NotComplete(f"{ideal} is not integrally closed")
        working = ideal
    oriented, transposed = orient(working)
    r = oriented.order()
    cls = classify(oriented)
    factorization = zariski_factor(oriented) if r >= 1 else None

    if cls.branch in (Branch.R2_OPEN, Branch.NOT_COVERED) and forced_k is None:
        verdict = Verdict.OPEN if cls.branch == Branch.R2_OPEN else Verdict.NOT_COVERED
        return Certificate(
            input=original,
            closed_input=closed,
            transposed=transposed,
            ideal=oriented,
            order=r,
            factorization=factorization,
            branch=cls.branch,
            k=None,
            matrix=None,
            checks=(),
            verdict=verdict,
        )

    k = _default_k(cls, r) if forced_k is None else forced_k
    if k is None:
        raise InternalInconsistency(f"no k for branch {cls.branch}")
    matrix = build_Mk(oriented, k)  # KOutOfRange for bad forced k

    checks: list[tuple[str, bool]] = []
    fit0_ok = fitting0(matrix) == oriented
    checks.append(("fitting0_equals_ideal", fit0_ok))
    ell = ell_value(oriented, k)
    fit1_ok = fitting1(matrix) == normalize([(1, 0), (0, ell)])
    checks.append((f"fitting1_equals_(x,y^{ell})", fit1_ok))
    from .oracle import module_min_gens

    mu_ok = module_min_gens(matrix) == r + 2
    checks.append(("min_gens_equals_r_plus_2", mu_ok))

    pattern = _pattern_check(cls, oriented, r)
    if pattern is not None and forced_k is None:
        checks.append(pattern)

    assert factorization is not None
    clause_checks, clause_ok = _indecomposability_checks(
        oriented, matrix, factorization, k
    )
    checks.extend(clause_checks)

    # integral closedness of M_k is settled for k <= r-1 whenever
    # Fitt_0(M_k) = I, and for the designated k of the Case II branches
    integrally_closed_known = (k <= r - 1 and fit0_ok) or (
        forced_k is None
        and cls.branch in (Branch.CASE_II_1, Branch.CASE_II_2)
        and (pattern is None or pattern[1])
    )

    all_ok = all(ok for _, ok in checks)
    if forced_k is not None and (not integrally_closed_known or not clause_ok):
        verdict = Verdict.UNKNOWN
    elif all_ok and integrally_closed_known:
        verdict = Verdict.INDECOMPOSABLE
    else:
        verdict = Verdict.UNKNOWN
    return Certificate(
        input=original,
        closed_input=closed,
        transposed=transposed,
        ideal=oriented,
        order=r,
        factorization=factorization,
        branch=cls.branch,
        k=k,
        matrix=matrix,
        checks=tuple(checks),
        verdict=verdict,
        forced_k=forced_k is not None,
    )


def certificate_diff(cert: Certificate) -> list[str]:
    """Re-derive every recorded field; list the mismatches (empty means valid)."""
    diffs: list[str] = []
    working = cert.closed_input if cert.closed_input is not None else cert.input
    if cert.closed_input is not None:
        from .newton import closure

        if closure(cert.input) != cert.closed_input:
            diffs.append("closed_input is not the closure of the input")
            return diffs
    try:
        oriented, transposed = orient(working)
    except Exception as exc:  # noqa: BLE001 - report, never raise
        return [f"orientation failed: {exc}"]
    if oriented != cert.ideal:
        diffs.append("oriented ideal mismatch")
        return diffs
    if transposed != cert.transposed:
        diffs.append("transposed flag mismatch")
    try:
        fresh = choose_k(
            working,
            forced_k=cert.k if cert.forced_k else None,
            close_first=cert.closed_input is not None,
        )
    except Exception as exc:  # noqa: BLE001
        return diffs + [f"re-running the decision failed: {exc}"]
    for name in ("order", "branch", "factorization", "verdict"):
        if getattr(fresh, name) != getattr(cert, name):
            diffs.append(f"{name} mismatch")
    if cert.k != fresh.k:
        if not (
            cert.branch == Branch.NO_ORDER1_FACTOR
            and cert.k in valid_k_set(classify(oriented), oriented.order())
        ):
            diffs.append("k mismatch")
    if cert.k is not None:
        try:
            expected_matrix = build_Mk(oriented, cert.k)
        except KOutOfRange:
            diffs.append("recorded k is out of range")
        else:
            if cert.matrix != expected_matrix:
                diffs.append("matrix mismatch")
    if cert.k == fresh.k and tuple(cert.checks) != tuple(fresh.checks):
        diffs.append("checks mismatch")
    return diffs


def verify_certificate(cert: Certificate) -> bool:
    return not certificate_diff(cert)


# convenience used by the CLI and tests
def decide(ideal: MonomialIdeal, **kwargs) -> Certificate:
    return choose_k(ideal, **kwargs)


def certificate_checks_pass(cert: Certificate) -> bool:
    return all(ok for _, ok in cert.checks)
