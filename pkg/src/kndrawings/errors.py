"""Exception types shared across the package."""


class DrawingError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(DrawingError):
    """Input data is malformed at the container level (ids out of range,
    wrong shapes).  Distinct from a semantic validation failure, which is
    reported through a ValidationReport instead of raised."""


class ParseError(DrawingError):
    """A serialized drawing or point configuration could not be parsed.

    The message names the offending field, e.g. ``crossings[2]: missing-sign``.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class DegeneracyError(DrawingError):
    """A geometric degeneracy was detected (coincident points, collinear
    triple, overlapping segments, or three segments through one point).

    ``ids`` names the offending vertices or edges.
    """

    def __init__(self, message: str, ids: tuple = ()):
        self.ids = tuple(ids)
        if self.ids:
            message = f"{message}: {self.ids}"
        super().__init__(message)


class NonSphericalError(DrawingError):
    """Face tracing produced counts violating V - E + F = 2."""


class FaceNotSimpleError(DrawingError):
    """A face boundary walk visits some node more than once."""


class TriangleNotSimpleError(DrawingError):
    """The union of a triangle's three edges does not form a simple closed
    walk in the plane map."""


class JordanViolationError(DrawingError):
    """Cutting the dual graph along a simple closed triangle walk did not
    leave exactly two connected components."""


class NoGeometryError(DrawingError):
    """An operation needing point coordinates was asked of a purely
    combinatorial drawing."""


class InternalInconsistencyError(DrawingError):
    """A derived structure contradicts itself; indicates a bug or corrupted
    intermediate data, not a user error."""
