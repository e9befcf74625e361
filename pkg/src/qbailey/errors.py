"""Exception types shared across the package."""


class QBaileyError(Exception):
    """Base class for all package errors."""


class TruncationError(QBaileyError):
    """A coefficient or comparison was requested beyond the known order."""


class ZeroDivisorError(QBaileyError):
    """A reciprocal of zero was demanded where it cannot be interpreted away."""


class NonTerminatingError(QBaileyError):
    """A series evaluation cannot terminate or exceeded its term budget."""


class RegistryError(QBaileyError):
    """Registry file failed to parse or validate."""
