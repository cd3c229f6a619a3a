"""Exception hierarchy shared by every module."""


class PrimeZetaError(Exception):
    """Base class for all library errors."""


class DomainError(PrimeZetaError, ValueError):
    """An argument lies outside the domain of the function."""


class PoleError(PrimeZetaError, ArithmeticError):
    """The eta prefactor 1/(1 - 2**(1-s)) is singular (or too close to it)."""


class OverflowGuard(PrimeZetaError, ArithmeticError):
    """A reciprocal would overflow because its argument is below the floor."""


class NoMinimumError(PrimeZetaError):
    """A scan window contains no interior local minimum."""


class QuadratureError(PrimeZetaError, ArithmeticError):
    """Quadrature did not reach the requested tolerance."""

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
