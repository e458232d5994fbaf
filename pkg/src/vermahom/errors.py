"""Shared exception types for the package."""


class ValidationError(ValueError):
    """A requested configuration or parse input violates a structural constraint."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(ValueError):
    """A precondition on the query parameters does not hold."""


class EnumerationBound(RuntimeError):
    """An enumeration would exceed its configured size limit."""
