"""Exception hierarchy shared by all modules."""


class ToricError(ValueError):
    """Base class for every error raised by this package."""


class ZeroVector(ToricError):
    pass


class NonSquare(ToricError):
    pass


class SingularMatrix(ToricError):
    pass


class InconsistentSystem(ToricError):
    """A linear system has no solution."""


class InvalidDimension(ToricError):
    pass


class InvalidFan(ToricError):
    """Raised when an operation needs a smooth complete fan and did not get one."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid fan: " + "; ".join(str(i) for i in report.issues))


class NotAFace(ToricError):
    pass


class UnboundedPolytope(ToricError):
    pass


class NotInPolytope(ToricError):
    pass


class DimensionMismatch(ToricError):
    pass


class MixedDegrees(ToricError):
    pass


class ParseError(ToricError):
    """Malformed fan or bivector input."""


class InternalInconsistency(AssertionError):
    """An invariant that the mathematics guarantees was violated."""
