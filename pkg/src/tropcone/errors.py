class TropconeError(Exception):
    """Base class for library errors."""


class PreconditionError(TropconeError, ValueError):
    """An operation was called outside its domain."""


class VerificationError(TropconeError):
    """A self-check failed; this signals a bug, not bad input."""


class CandidateCapExceeded(TropconeError):
    """Polar enumeration would exceed the configured candidate cap."""
