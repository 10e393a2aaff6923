"""Exception types raised across the package."""


class PixScrambleError(Exception):
    """Base class for every error this package raises on bad input."""


class RegionBoundsError(PixScrambleError, IndexError):
    """A region does not fit inside the image it is applied to."""

    def __init__(self, message, axis=None):
        super().__init__(message)
        self.axis = axis


class ShapeError(PixScrambleError, ValueError):
    """Array or plane dimensions do not agree."""


class MetadataError(PixScrambleError, ValueError):
    """Malformed sidecar metadata text."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class UndefinedCorrelationError(PixScrambleError, ValueError):
    """Pearson correlation requested for a zero-variance plane."""
