"""Exception types shared across the package."""
from .specfun import PoleError

__all__ = ["DomainError", "SingularPointError", "ConvergenceError", "PoleError"]


class DomainError(ValueError):
    """Parameters outside the domain where a formula is defined."""


class SingularPointError(DomainError):
    """A rational potential or eigenfunction has a vanishing denominator."""

    def __init__(self, message, x=None, index=None):
        super().__init__(message)
        self.x = x
        self.index = index


class ConvergenceError(RuntimeError):
    """Numerical scattering failed its step-halving check."""
