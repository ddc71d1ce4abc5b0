"""Exact geometric primitives and predicates in R^3.

Everything here is pure and exact: points, spheres, planes and circles
carry Fraction coordinates, spheres store the *squared* radius (so radii
like 1/sqrt(2) stay representable), and every predicate is decided by
rational arithmetic with no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CollinearInput, IdenticalSpheres, InputError
from .rational import rat


@dataclass(frozen=True, order=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "y", rat(self.y))
        object.__setattr__(self, "z", rat(self.z))

    def coords(self):
        return (self.x, self.y, self.z)

    def __sub__(self, other: "Point3"):
        return (self.x - other.x, self.y - other.y, self.z - other.z)


def dot(u, v) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def squared_distance(p: Point3, q: Point3) -> Fraction:
    """Exact |p-q|^2."""
    d = p - q
    return dot(d, d)


@dataclass(frozen=True, order=True)
class Sphere:
    center: Point3
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius_sq", rat(self.radius_sq))
        if self.radius_sq <= 0:
            raise InputError(f"sphere needs radius_sq > 0, got {self.radius_sq}")


def on_sphere(p: Point3, s: Sphere) -> bool:
    return squared_distance(p, s.center) == s.radius_sq


@dataclass(frozen=True, order=True)
class Plane:
    """The plane {q : normal . q = offset}.

    Canonical scaling: the first nonzero normal coordinate is 1, which
    makes plane equality a plain field comparison.
    """

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        n = tuple(rat(c) for c in self.normal)
        off = rat(self.offset)
        pivot = next((c for c in n if c != 0), None)
        if pivot is None:
            raise InputError("plane normal must be nonzero")
        n = tuple(c / pivot for c in n)
        off = off / pivot
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", off)

    def contains(self, p: Point3) -> bool:
        return dot(self.normal, p.coords()) == self.offset

    def foot(self, p: Point3) -> Point3:
        """Orthogonal projection of p onto the plane."""
        n = self.normal
        t = (self.offset - dot(n, p.coords())) / dot(n, n)
        return Point3(p.x + t * n[0], p.y + t * n[1], p.z + t * n[2])


@dataclass(frozen=True, order=True)
class Circle3:
    """A circle as plane-sphere intersection, in canonical form.

    Canonical form means the carrier sphere is the smallest sphere
    containing the circle: its center lies on the carrier plane.  Two
    equal circles then compare equal field-wise, so circles can be used
    as dict keys during decomposition.
    """

    carrier_plane: Plane
    carrier_sphere: Sphere

    def __post_init__(self):
        if not self.carrier_plane.contains(self.carrier_sphere.center):
            raise InputError("carrier sphere center must lie on the carrier plane")

    @property
    def center(self) -> Point3:
        return self.carrier_sphere.center

    @property
    def radius_sq(self) -> Fraction:
        return self.carrier_sphere.radius_sq


def circle_from(plane: Plane, sphere: Sphere) -> Circle3:
    """Canonicalize (plane, any containing sphere) into a Circle3.

    Raises InputError unless the plane cuts the sphere in a real circle
    of positive squared radius.
    """
    foot = plane.foot(sphere.center)
    rho_sq = sphere.radius_sq - squared_distance(foot, sphere.center)
    if rho_sq <= 0:
        raise InputError("plane does not cut the sphere in a real circle")
    return Circle3(plane, Sphere(foot, rho_sq))


def point_on_circle(p: Point3, c: Circle3) -> bool:
    return c.carrier_plane.contains(p) and on_sphere(p, c.carrier_sphere)


def circle_through(p: Point3, q: Point3, r: Point3) -> Circle3:
    """The unique circle through three non-collinear points."""
    n = cross(q - p, r - p)
    if n == (Fraction(0), Fraction(0), Fraction(0)):
        raise CollinearInput(f"collinear or coincident points: {p}, {q}, {r}")
    plane = Plane(n, dot(n, p.coords()))
    # Circumcenter: intersect the carrier plane with the two
    # perpendicular-bisector planes of (p,q) and (p,r).
    rows = [
        (plane.normal, plane.offset),
        (q - p, (dot(q.coords(), q.coords()) - dot(p.coords(), p.coords())) / 2),
        (r - p, (dot(r.coords(), r.coords()) - dot(p.coords(), p.coords())) / 2),
    ]
    center = _solve3(rows)
    ctr = Point3(*center)
    return Circle3(plane, Sphere(ctr, squared_distance(ctr, p)))


def _solve3(rows):
    """Solve a 3x3 rational linear system given as (coeff-triple, rhs) rows."""
    a = [[rows[i][0][0], rows[i][0][1], rows[i][0][2], rows[i][1]] for i in range(3)]
    for col in range(3):
        piv = next((r for r in range(col, 3) if a[r][col] != 0), None)
        if piv is None:
            raise InputError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(3):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return (a[0][3], a[1][3], a[2][3])


def cocircular(points) -> bool:
    """True iff all points lie on one common circle.

    Size <= 2 is vacuously true; a non-collinear triple spans a circle,
    a collinear triple (or larger collinear set) does not.
    """
    pts = []
    for p in points:
        if p not in pts:
            pts.append(p)
    if len(pts) <= 2:
        return True
    base = None
    for i in range(2, len(pts)):
        if cross(pts[1] - pts[0], pts[i] - pts[0]) != (Fraction(0),) * 3:
            base = circle_through(pts[0], pts[1], pts[i])
            break
    if base is None:
        return False  # all collinear
    return all(point_on_circle(p, base) for p in pts)


@dataclass(frozen=True)
class Empty:
    """No real intersection / locus; reason is 'disjoint_or_nested',
    'concentric' or 'degenerate' (single-point locus, carried in point)."""

    reason: str
    point: Point3 | None = None


@dataclass(frozen=True)
class Tangent:
    point: Point3


def _sphere_quadratic(s: Sphere):
    """Coefficients (lx, ly, lz, const) of the sphere quadratic
    x^2+y^2+z^2 + lx*x + ly*y + lz*z + const = 0."""
    c = s.center
    return (-2 * c.x, -2 * c.y, -2 * c.z, dot(c.coords(), c.coords()) - s.radius_sq)


def sphere_pair_circle(s1: Sphere, s2: Sphere):
    """Intersection of two distinct spheres: a Circle3, a Tangent point,
    or Empty."""
    if s1 == s2:
        raise IdenticalSpheres("sphere_pair_circle needs distinct spheres")
    q1 = _sphere_quadratic(s1)
    q2 = _sphere_quadratic(s2)
    n = (q1[0] - q2[0], q1[1] - q2[1], q1[2] - q2[2])
    if n == (Fraction(0),) * 3:
        return Empty("concentric")
    radical = Plane(n, q2[3] - q1[3])
    foot = radical.foot(s1.center)
    rho_sq = s1.radius_sq - squared_distance(foot, s1.center)
    if rho_sq > 0:
        return Circle3(radical, Sphere(foot, rho_sq))
    if rho_sq == 0:
        return Tangent(foot)
    return Empty("disjoint_or_nested")


def circle_in_sphere(c: Circle3, s: Sphere) -> bool:
    """True iff every point of the circle lies on s, decided by pencil
    membership: s's quadratic must equal the carrier sphere's quadratic
    plus a rational multiple of the carrier plane's linear form."""
    qs = _sphere_quadratic(s)
    qc = _sphere_quadratic(c.carrier_sphere)
    diff = tuple(a - b for a, b in zip(qs, qc))
    form = (*c.carrier_plane.normal, -c.carrier_plane.offset)
    pivot = next(i for i, v in enumerate(form) if v != 0)  # normal is nonzero
    lam = diff[pivot] / form[pivot]
    return all(diff[i] == lam * form[i] for i in range(4))
