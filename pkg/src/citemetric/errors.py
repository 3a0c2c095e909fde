"""Exception types shared across the package."""


class CitemetricError(Exception):
    """Base class for all library errors."""


class ValidationError(CitemetricError):
    """Input data violates a documented precondition."""


class DomainError(CitemetricError):
    """A numeric argument lies outside the operation's domain."""


class EmptyProfileError(CitemetricError):
    """The operation needs at least one cited work."""


class MissingFieldError(CitemetricError):
    """An optional field required by this operation is absent."""


class ParseError(CitemetricError):
    """A profile file could not be parsed; the message carries the position."""
