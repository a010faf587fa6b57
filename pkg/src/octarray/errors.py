"""Exceptions shared across the package."""


class ValidationError(ValueError):
    """Raised when an input violates an invariant of the requested operation."""
