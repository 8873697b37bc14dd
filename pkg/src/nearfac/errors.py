"""Exception types shared across the package."""


class NearfacError(Exception):
    """Base class for all package errors."""


class DomainError(NearfacError):
    """Invalid input: bad element code, group mismatch, malformed parameters."""


class CapabilityError(NearfacError):
    """The request is well-formed but outside what this package supports."""


class InvariantViolation(NearfacError):
    """An internal consistency check failed; indicates a bug or a false theorem."""


class BudgetExhausted(NearfacError):
    """A search ran out of its node or time budget."""
