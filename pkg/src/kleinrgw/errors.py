"""Exception hierarchy shared by the library and the command line."""


class KleinRGWError(Exception):
    """Base class for all errors raised by this package."""


class BoundsError(KleinRGWError, ValueError):
    """A degree or other size parameter is outside the supported range."""


class ArgumentError(KleinRGWError, ValueError):
    """An argument is malformed or inconsistent with another argument."""


class NotInvertibleError(KleinRGWError, ZeroDivisionError):
    """A series or polynomial has no inverse in the ring it lives in."""


class TruncationError(KleinRGWError):
    """The requested truncation orders are too small for the computation."""


class ExtractionError(KleinRGWError):
    """A residual does not lie in the span of the expected basis."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class VerificationError(KleinRGWError):
    """An identity that must hold exactly failed to hold."""

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}
