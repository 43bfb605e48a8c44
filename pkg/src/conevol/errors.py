"""Exception hierarchy shared by all conevol modules.

Input problems (bad normals, bad right-hand sides, malformed targets) derive
from InputError so callers and the CLI can map them to "invalid input".
InternalInvariantViolation signals a bug in our own geometry, never bad data.
"""


class ConeVolumeError(Exception):
    """Base class for all conevol errors."""


class InputError(ConeVolumeError, ValueError):
    """Invalid user-supplied data."""


class NotUnit(InputError):
    """A supplied normal vector does not have Euclidean norm 1."""


class DuplicateNormal(InputError):
    """Two supplied normals coincide (within angular tolerance)."""


class NotPositivelySpanning(InputError):
    """The normals do not positively span the plane (some angular gap >= pi)."""


class DegeneratePolygon(InputError):
    """The polygon P(U, b) has (numerically) empty interior."""


class NotUnimodular(InputError):
    """The transform matrix does not have |det| = 1."""


class NotSquareIndex(InputError):
    """Index is not a member of the trapezoid-only normal set."""


class NoAntipodalPair(InputError):
    """A quadrilateral oracle was asked about normals with no antipodal pair."""


class NotTrapezoid(InputError):
    """The labeling passed to the trapezoid oracle is not a trapezoid."""


class NotParallelogram(InputError):
    """The labeling passed to the parallelogram oracle is not a parallelogram."""


class NotNormalized(InputError):
    """A weight vector is negative or does not sum to 1."""


class InvalidTarget(InputError):
    """A solve/membership target vector is not a valid normalized weight vector."""


class DimensionMismatch(InputError):
    """A polytope's declared dimension disagrees with its vertex set."""


class TooManyDegenerateDraws(InputError):
    """Random sampling kept producing degenerate polygons."""


class InternalInvariantViolation(ConeVolumeError):
    """A structural law that must hold for valid inputs failed: a bug."""
