"""Exact, reproducible configuration generators.

Rational points on circles come from the tangent-half-angle
parameterization (Pythagorean fractions), because generic circles carry
no rational points.  Randomness uses an in-package splitmix64 generator,
fully specified by its recurrence, so identical specs and seeds give
byte-identical output everywhere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ImaginarySphere, InfeasibleCircle, InputError
from .geom import Circle3, Point3, Sphere, dot
from .incidence import PointSet, SphereSet
from .surface import SurfacePoly

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit PRNG.

    Recurrence: state += 0x9E3779B97F4A7C15 (mod 2^64), then
    z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
    z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one generator run; same spec + seed => identical output."""

    kind: str
    count: int = 0
    seed: int = 0
    params: tuple = ()  # extra (key, value) pairs, kind-specific


def gen_grid(k: int) -> PointSet:
    """All k^3 integer points of [0, k)^3."""
    if k < 1:
        raise InputError("grid size must be >= 1")
    rng = range(k)
    return PointSet(Point3(x, y, z) for x in rng for y in rng for z in rng)


def gen_sphere_half(depth: int) -> PointSet:
    """Rational points on the sphere x^2+y^2+z^2 = 1/2.

    Integer solutions of a^2+b^2+c^2 = 2 s^2 give the points
    (a, b, c) / (2s); depth bounds s.  depth=1 yields the 12 points
    (+-1/2, +-1/2, 0) and coordinate permutations.
    """
    if depth < 1:
        raise InputError("depth must be >= 1")
    pts = set()
    for s in range(1, depth + 1):
        target = 2 * s * s
        bound = math.isqrt(target)
        for a in range(-bound, bound + 1):
            rem_a = target - a * a
            bb = math.isqrt(rem_a)
            for b in range(-bb, bb + 1):
                c2 = rem_a - b * b
                c = math.isqrt(c2)
                if c * c != c2:
                    continue
                for cc in ({c, -c}):
                    pts.add(Point3(Fraction(a, 2 * s), Fraction(b, 2 * s),
                                   Fraction(cc, 2 * s)))
    return PointSet(sorted(pts))


def unit_circle_directions():
    """Yield distinct rational (cos, sin) pairs on the unit circle,
    deterministically: (1,0), (-1,0), then the tangent-half-angle images
    of t = p/q ordered by |p|+q."""
    one = Fraction(1)
    yield (one, Fraction(0))
    yield (-one, Fraction(0))
    for h in itertools.count(2):
        for q in range(1, h):
            p = h - q
            if math.gcd(p, q) != 1:
                continue
            for t in (Fraction(p, q), Fraction(-p, q)):
                d = 1 + t * t
                yield ((1 - t * t) / d, 2 * t / d)


def _first_directions(count: int, budget: int = 100_000):
    out = []
    for i, d in enumerate(unit_circle_directions()):
        if len(out) >= count:
            break
        if i > budget:
            raise InfeasibleCircle("direction budget exhausted")
        out.append(d)
    if len(out) < count:
        raise InfeasibleCircle("direction budget exhausted")
    return out


def cylinder_poly() -> SurfacePoly:
    return SurfacePoly({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 0): -1})


def torus_poly(big_r: Fraction = Fraction(2), small_r: Fraction = Fraction(1)) -> SurfacePoly:
    """(x^2+y^2+z^2+R^2-r^2)^2 - 4R^2(x^2+y^2), degree 4."""
    k = big_r * big_r - small_r * small_r
    four_r2 = 4 * big_r * big_r
    return SurfacePoly({
        (4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1,
        (2, 2, 0): 2, (2, 0, 2): 2, (0, 2, 2): 2,
        (2, 0, 0): 2 * k - four_r2, (0, 2, 0): 2 * k - four_r2,
        (0, 0, 2): 2 * k, (0, 0, 0): k * k,
    })


def gen_surface_points(kind: str, circles: int, per_circle: int,
                       big_r: Fraction = Fraction(2), small_r: Fraction = Fraction(1)):
    """Points on parallel circles of a cylinder or torus, plus the
    surface polynomial.  Every emitted point satisfies on_variety."""
    if circles < 1 or per_circle < 1:
        raise InputError("circles and per_circle must be >= 1")
    theta = _first_directions(per_circle)
    pts = []
    if kind == "cylinder":
        poly = cylinder_poly()
        for j in range(circles):
            z = Fraction(j)
            for (c, s) in theta:
                pts.append(Point3(c, s, z))
    elif kind == "torus":
        if small_r <= 0 or big_r <= small_r:
            raise InputError("torus needs 0 < r < R")
        poly = torus_poly(big_r, small_r)
        for (cphi, sphi) in _first_directions(circles):
            z = small_r * sphi
            rho = big_r + small_r * cphi
            for (c, s) in theta:
                pts.append(Point3(rho * c, rho * s, z))
    else:
        raise InputError(f"unknown surface kind {kind!r}")
    return PointSet(pts), poly


def gen_sphere_pencil(c: Circle3, lambdas) -> SphereSet:
    """Spheres carrier + lambda * plane for each lambda; every result
    contains the circle by pencil algebra."""
    ctr = c.center
    n = c.carrier_plane.normal
    off = c.carrier_plane.offset
    spheres = []
    for lam_raw in lambdas:
        lam = Fraction(lam_raw)
        new_center = Point3(ctr.x - lam * n[0] / 2, ctr.y - lam * n[1] / 2,
                            ctr.z - lam * n[2] / 2)
        r_sq = (dot(new_center.coords(), new_center.coords())
                - dot(ctr.coords(), ctr.coords()) + c.radius_sq + lam * off)
        if r_sq <= 0:
            raise ImaginarySphere(f"lambda={lam} gives radius_sq={r_sq}")
        spheres.append(Sphere(new_center, r_sq))
    return SphereSet(spheres)


def _random_fraction(rng: SplitMix64, bound: int, den_bound: int) -> Fraction:
    num = rng.below(2 * bound * den_bound + 1) - bound * den_bound
    den = 1 + rng.below(den_bound)
    return Fraction(num, den)


def gen_random_points(count: int, seed: int, bound: int = 20, den_bound: int = 8) -> PointSet:
    """Seeded pseudo-random rational points with bounded numerators and
    denominators; duplicates are re-rolled so output size is exact."""
    rng = SplitMix64(seed)
    pts = []
    seen = set()
    while len(pts) < count:
        p = Point3(_random_fraction(rng, bound, den_bound),
                   _random_fraction(rng, bound, den_bound),
                   _random_fraction(rng, bound, den_bound))
        if p in seen:
            continue
        seen.add(p)
        pts.append(p)
    return PointSet(pts)


def gen_random_spheres(count: int, seed: int, bound: int = 20, den_bound: int = 8) -> SphereSet:
    rng = SplitMix64(seed)
    spheres = []
    seen = set()
    while len(spheres) < count:
        center = Point3(_random_fraction(rng, bound, den_bound),
                        _random_fraction(rng, bound, den_bound),
                        _random_fraction(rng, bound, den_bound))
        r_sq = Fraction(1 + rng.below(bound * bound), 1 + rng.below(den_bound))
        s = Sphere(center, r_sq)
        if s in seen:
            continue
        seen.add(s)
        spheres.append(s)
    return SphereSet(spheres)


def gen_random_incident_instance(m: int, n: int, seed: int, bound: int = 10,
                                 den_bound: int = 4):
    """A random instance engineered to actually have incidences: spheres
    pass through chosen points, and antipodal mirror points are added so
    several points share spheres."""
    rng = SplitMix64(seed)
    base = list(gen_random_points(max(2, m // 2), seed ^ 0x5EED, bound, den_bound))
    spheres = []
    seen_s = set()
    pts = list(base)
    seen_p = set(pts)
    while len(spheres) < n:
        p = base[rng.below(len(base))]
        center = Point3(_random_fraction(rng, bound, den_bound),
                        _random_fraction(rng, bound, den_bound),
                        _random_fraction(rng, bound, den_bound))
        if center == p:
            continue
        d = p - center
        s = Sphere(center, dot(d, d))
        if s in seen_s:
            continue
        seen_s.add(s)
        spheres.append(s)
        mirror = Point3(2 * center.x - p.x, 2 * center.y - p.y, 2 * center.z - p.z)
        if len(pts) < m and mirror not in seen_p:
            seen_p.add(mirror)
            pts.append(mirror)
    while len(pts) < m:
        p = Point3(_random_fraction(rng, bound, den_bound),
                   _random_fraction(rng, bound, den_bound),
                   _random_fraction(rng, bound, den_bound))
        if p in seen_p:
            continue
        seen_p.add(p)
        pts.append(p)
    return PointSet(pts), SphereSet(spheres)


def run_spec(spec: GeneratorSpec):
    """Dispatch a GeneratorSpec; used by the CLI and the service."""
    params = dict(spec.params)
    if spec.kind == "grid":
        return gen_grid(int(params.get("k", spec.count or 2)))
    if spec.kind == "sphere_half":
        return gen_sphere_half(int(params.get("depth", 1)))
    if spec.kind in ("cylinder", "torus"):
        pts, _ = gen_surface_points(spec.kind, int(params.get("circles", 2)),
                                    int(params.get("per_circle", 4)))
        return pts
    if spec.kind == "random_points":
        return gen_random_points(spec.count, spec.seed)
    if spec.kind == "random_spheres":
        return gen_random_spheres(spec.count, spec.seed)
    raise InputError(f"unknown generator kind {spec.kind!r}")
