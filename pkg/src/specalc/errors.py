"""Exception types shared across the package."""


class SpecalcError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SpecalcError):
    """A point (or spectrum) lies outside a field's declared domain."""


class ConvergenceError(SpecalcError):
    """An iterative routine exhausted its budget without converging."""


class SpectralGapError(SpecalcError):
    """An operation requiring a simple spectrum met a (near-)degenerate one."""


class NonsmoothFieldError(SpecalcError):
    """A derivative was requested from a value-only field."""
