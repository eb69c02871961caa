"""Exception hierarchy.

Every failure raised by the library derives from :class:`MonopoleError` so that
callers (and the CLI) can map families of errors to exit codes.
"""


class MonopoleError(Exception):
    """Base class for all library errors."""


class DomainError(MonopoleError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or numerically at) a pole."""


class ConfigurationError(MonopoleError, ValueError):
    """Inconsistent or malformed configuration / parameters."""


class NumericError(MonopoleError, ArithmeticError):
    """A numerical method failed to converge or to bracket a root."""


class IntegrityError(MonopoleError):
    """A self-consistency check (residual, identity, cross-route) failed."""


class ResourceError(MonopoleError):
    """A computation exceeds the configured size or time budget."""
