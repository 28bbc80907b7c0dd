"""Exception types shared across the package.

Every domain-precondition violation raises a subclass of RiordanGepError,
so callers (and the CLI) can catch one base class.
"""


class RiordanGepError(ValueError):
    """Base class for all precondition and domain errors."""


class NonzeroConstantTerm(RiordanGepError):
    """An operation required a series with constant term 0."""


class ZeroConstantTerm(RiordanGepError):
    """An operation required a series with nonzero constant term."""


class ConstantTermNotOne(RiordanGepError):
    """An operation required a series with constant term 1."""


class NotInvertibleForComposition(RiordanGepError):
    """Compositional inverse needs g(0) = 0 and g'(0) != 0."""


class InsufficientOrder(RiordanGepError):
    """A coefficient beyond the stored truncation order was requested."""


class KindMismatch(RiordanGepError):
    """Riordan array kinds are incompatible for the requested operation."""


class NotPolynomial(RiordanGepError):
    """A numerator-polynomial extraction found nonvanishing high coefficients."""


class OutOfRange(RiordanGepError):
    """An index argument lies outside its documented range."""


class DegreeTooHigh(RiordanGepError):
    """A polynomial argument exceeds the degree bound of a transform."""


class PoleAtCoefficient(RiordanGepError):
    """The Lagrange coefficient formula hit phi + beta*n = 0.

    Exact arithmetic cannot take the limit; callers must choose phi (or the
    compositional construction) so the pole is avoided.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"pole in coefficient formula at n={index}")


class LeadingCoefficientNotOne(RiordanGepError):
    """A Dirichlet series operation required a_1 = 1."""
