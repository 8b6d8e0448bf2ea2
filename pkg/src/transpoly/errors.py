"""Exception hierarchy shared by every module."""


class TranspolyError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(TranspolyError, ValueError):
    """A presentation or command parameter is outside its legal range."""


class DomainError(TranspolyError, ValueError):
    """An index or vector does not live in the expected ambient space."""


class PreconditionError(TranspolyError, ValueError):
    """Input violates a documented precondition (e.g. unequal degrees)."""


class ResourceLimitError(TranspolyError, RuntimeError):
    """A desk-scale resource guard would be exceeded."""
