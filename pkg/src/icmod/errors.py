"""Exception hierarchy shared by the whole package."""


class DomainError(Exception):
    """Base class for all mathematical-domain failures (CLI exit code 1)."""


class NotMPrimary(DomainError):
    """A generating set does not cut out a finite-colength monomial ideal."""


class NotComplete(DomainError):
    """An operation requiring an integrally closed ideal got one that is not."""


class KOutOfRange(DomainError):
    """The module parameter k is outside the admissible range 1 <= k < b_r."""


class NonMonomialMinor(DomainError):
    """A 2x2 minor is a genuine binomial; the matrix is outside the supported family."""


class FittingMismatch(DomainError):
    """The zeroth Fitting ideal of M_k does not reproduce the input ideal."""


class NotFiniteColength(DomainError):
    """A truncation computation detected an ideal or module of infinite colength."""


class InternalInconsistency(DomainError):
    """A structural fact the theory guarantees failed to hold; indicates a bug."""


class ParseError(DomainError):
    """Syntax error in the surface expression language."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col
