"""Exception hierarchy shared by the library and the CLI."""


class ZccsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(ZccsError, ValueError):
    """Operands have incompatible lengths or shapes."""


class DomainError(ZccsError, ValueError):
    """A parameter lies outside the set an operation supports."""


class PreconditionError(ZccsError):
    """An operation was called on input that has not passed required checks."""


class DocumentError(ZccsError, ValueError):
    """A set document could not be parsed."""
