"""Exception types raised by skewpm."""


class SkewPMError(Exception):
    """Base class for all skewpm errors."""


class DimensionError(SkewPMError, ValueError):
    """Shapes or lengths do not match what an operation requires."""


class ParityError(DimensionError):
    """An even-order matrix was required."""


class SubsetRangeError(SkewPMError, IndexError):
    """A vertex subset refers to indices outside the ambient [n]."""


class SkewSymmetryError(SkewPMError, ValueError):
    """A matrix that must be skew-symmetric is not.

    ``i`` and ``j`` are the 1-based coordinates of the first offending entry.
    """

    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        if message is None:
            message = f"matrix is not skew-symmetric at ({i},{j})"
        super().__init__(message)


class MatrixFormatError(SkewPMError, ValueError):
    """Malformed matrix text; ``line`` and ``col`` are 1-based."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, column {col}: {message}"
        super().__init__(message)


class DomainError(SkewPMError, ValueError):
    """An input lies outside the domain an operation is defined on."""


class OrientationError(DomainError):
    """An orientation does not satisfy a required arc pattern."""


class StructureError(SkewPMError, ValueError):
    """Two digraphs do not share the required underlying graph."""


class ResourceError(SkewPMError, RuntimeError):
    """A problem exceeds an explicit size guard."""
