"""Exception hierarchy shared by all modules."""


class SphereIncError(Exception):
    """Base class for all library errors."""


class InputError(SphereIncError):
    """Malformed or inadmissible input data (CLI exit code 3)."""


class CollinearInput(InputError):
    """Three points that are collinear (or coincident) where a circle is required."""


class IdenticalSpheres(InputError):
    """Two spheres expected to be distinct are equal."""


class DuplicateItem(InputError):
    """Duplicate point or sphere rejected at ingestion."""


class TooFewPoints(InputError):
    """An operation needs more points than were supplied."""


class NotIncident(InputError):
    """A point expected to lie on a sphere does not."""


class NotDegenerate(InputError):
    """Operation requires a strongly degenerate sphere."""


class CoincidentPoints(InputError):
    """Two points expected to be distinct coincide."""


class ImaginarySphere(InputError):
    """A pencil parameter produced a sphere with non-positive squared radius."""


class InfeasibleCircle(InputError):
    """A requested circle admits no rational points within the parameter budget."""


class NonPositiveValue(InputError):
    """Log-log fitting requires strictly positive measured values."""


class SizeGuard(SphereIncError):
    """An instance exceeded a configured complexity budget."""


class VerificationError(SphereIncError):
    """An invariant check failed (CLI exit code 2)."""
