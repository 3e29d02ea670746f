"""Exception hierarchy. The CLI maps each class to an exit code."""


class QuiverCMError(Exception):
    """Base class for every error raised by the package."""


class InputError(QuiverCMError, ValueError):
    """Malformed or inconsistent input (files, dimension vectors, arguments)."""


class NotApplicableError(InputError):
    """An operation was called outside its domain (e.g. a cyclic quiver)."""


class ScaleError(QuiverCMError):
    """The Groebner engine refused an input above its size guardrail."""


class VerificationError(QuiverCMError):
    """An internal cross-check failed; carries a diagnostic message."""
