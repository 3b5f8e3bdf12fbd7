"""Exception hierarchy for colebrook_omega."""


class ColebrookError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ColebrookError, ValueError):
    """The transformed argument ``x = A + B`` is not positive."""


class NonPhysicalResultError(ColebrookError, ValueError):
    """An approximation produced ``1/sqrt(f) <= 0``."""


class UnsupportedTermError(ColebrookError, ValueError):
    """A series term or order outside the implemented range was requested."""


class UnknownMethodError(ColebrookError, KeyError):
    """Lookup of a method id that is not in the registry."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class InvalidReferenceError(ColebrookError, ValueError):
    """Relative error requested against a non-positive reference value."""


class OracleFailureError(ColebrookError, RuntimeError):
    """The iterative reference solver did not converge.

    ``point`` carries the offending input when known.
    """

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class StreamExhaustedError(ColebrookError, RuntimeError):
    """A Sobol stream was advanced past its last representable index."""
