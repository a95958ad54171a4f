"""Exception types shared across the package."""


class CpsepError(Exception):
    """Base class for all package errors."""


class InvalidInput(CpsepError, ValueError):
    """Malformed graph, vertex set, constraint or instance."""


class NoSeparator(CpsepError):
    """Raised when a separator is requested but none exists (infinite kappa)."""


class ResourceLimit(CpsepError):
    """An enumeration exceeded its configured cap."""


class ContractViolation(CpsepError):
    """An internal invariant failed. Indicates a bug, not bad input."""
