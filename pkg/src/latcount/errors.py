"""Exception hierarchy shared across the package."""


class LatcountError(Exception):
    """Base class for all errors raised by latcount."""


class DimensionError(LatcountError):
    """Shapes or index ranges are inconsistent."""


class SingularMatrixError(LatcountError):
    """A square matrix required to be invertible has determinant zero."""


class RankError(LatcountError):
    """An input system violates its rank precondition."""


class InfeasibleLatticeError(LatcountError):
    """An equality system has no integer solutions at all (count is zero)."""


class SimplicityError(LatcountError):
    """A polytope expected to be simple has a degenerate vertex."""


class UnboundedError(LatcountError):
    """The operation requires a bounded polytope."""


class EmptyPolytopeError(LatcountError):
    """The operation requires a nonempty polytope."""


class DirectionVectorError(LatcountError):
    """No projection vector avoiding all cone hyperplanes was found."""


class ChamberViolationError(LatcountError):
    """A parametric query left the chamber the tables were built for."""


class BruteForceCapError(LatcountError):
    """The enumeration box exceeds the configured safety cap."""


class InternalConsistencyError(LatcountError):
    """An integrality or invariant assertion failed; indicates a bug."""


class ProblemFileError(LatcountError):
    """A problem file is malformed or dimensionally inconsistent."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
