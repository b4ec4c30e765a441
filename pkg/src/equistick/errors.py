"""Exception hierarchy.

Every error raised by the library derives from :class:`EquistickError` so the
CLI can report a machine-readable error name for any failure.
"""


class EquistickError(Exception):
    """Base class for all library errors."""


# arc presentations
class PresentationError(EquistickError, ValueError):
    pass


class DegreeError(PresentationError):
    pass


class LoopArc(PresentationError):
    pass


class Disconnected(PresentationError):
    pass


class CountMismatch(PresentationError):
    pass


class NoValidRotation(PresentationError):
    pass


class ParseError(PresentationError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


# diagrams and invariants
class DiagramError(EquistickError):
    pass


class TooManyCrossings(DiagramError):
    pass


class NoGenericProjection(DiagramError):
    pass


# geometry
class GeometryError(EquistickError):
    pass


class NotEmbedded(GeometryError):
    pass


class ApexImpossible(GeometryError):
    pass


class NoRootFound(GeometryError):
    pass


class KnotTypeChanged(GeometryError):
    pass


class RetriesExhausted(GeometryError):
    pass


# connected sums
class NoEligibleArc(EquistickError):
    pass


class RemapCollision(EquistickError):
    pass
