"""Exception types shared across the package."""


class GeomscoreError(Exception):
    """Base class for all errors raised by this package."""


class InputValidationError(GeomscoreError, ValueError):
    """Data content is unusable (non-finite values, bad shapes)."""


class ParameterError(GeomscoreError, ValueError):
    """A parameter is out of its documented range or inconsistent."""


class FormatError(GeomscoreError, ValueError):
    """A file could not be parsed; message carries the location."""


class InternalConsistencyError(GeomscoreError, RuntimeError):
    """An internal invariant was violated; never silently ignored."""


class RunCancelled(GeomscoreError, RuntimeError):
    """An experiment run was stopped through its cancellation token."""
