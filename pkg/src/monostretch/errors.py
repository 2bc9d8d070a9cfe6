"""Exception types shared across the package."""


class MonostretchError(Exception):
    """Base class for all package errors."""


class InvalidDrawingError(MonostretchError):
    def __init__(self, report, stage=""):
        self.report = report
        self.stage = stage
        msg = "invalid drawing"
        if stage:
            msg += f" at stage {stage!r}"
        super().__init__(f"{msg}: {report}")


class DegenerateOverlap(MonostretchError):
    """Two segments overlap in a positive-length collinear piece."""


class AmbiguousIncidence(MonostretchError):
    """A vertical ray passes through an endpoint of the queried edge."""


class GraphMismatch(MonostretchError):
    """Two drawings do not share the same underlying graph."""


class NotEvenError(MonostretchError):
    def __init__(self, odd_pairs):
        self.odd_pairs = list(odd_pairs)
        super().__init__(f"drawing is not even; odd pairs: {self.odd_pairs}")


class NotCrossingFree(MonostretchError):
    pass


class DisconnectedGraph(MonostretchError):
    pass


class NotPlanarRotation(MonostretchError):
    """Face tracing certified positive genus on input that should be planar."""


class DuplicateX(MonostretchError):
    pass


class TooShort(MonostretchError):
    pass


class PointOnCurve(MonostretchError):
    pass


class DegenerateCorner(MonostretchError):
    pass


class PreconditionViolated(MonostretchError):
    pass


class NoHit(MonostretchError):
    """Horizontal ray left the drawing without meeting any edge."""


class NotSeparating(MonostretchError):
    pass


class WrongDegree(MonostretchError):
    pass


class SeparatingTrianglePresent(MonostretchError):
    pass


class DegenerateTriangle(MonostretchError):
    pass


class OrientationMismatch(MonostretchError):
    pass


class NoFeasibleAlpha(MonostretchError):
    pass


class FingerprintMismatch(MonostretchError):
    pass


class LogMismatch(MonostretchError):
    pass


class NotTwoConnectedAfterFrame(MonostretchError):
    pass


class TriangulationStuck(MonostretchError):
    pass


class InternalInvariantViolation(MonostretchError):
    """A structural fact the algorithms rely on failed; indicates a bug or bad input."""


class VerificationFailedError(MonostretchError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"output verification failed: {report}")
