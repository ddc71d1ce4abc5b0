import math
from fractions import Fraction

import pytest

from sphereinc import (Point3, PointSet, SphereSet, circle_through,
                       gen_sphere_pencil, gen_surface_points)


@pytest.fixture
def equator_points():
    return [Point3(1, 0, 0), Point3(-1, 0, 0), Point3(0, 1, 0), Point3(0, -1, 0)]


@pytest.fixture
def equator_circle(equator_points):
    return circle_through(equator_points[0], equator_points[2], equator_points[1])


@pytest.fixture
def pencil_fixture(equator_points, equator_circle):
    """4 cocircular points and 2 spheres through their circle."""
    return PointSet(equator_points), gen_sphere_pencil(equator_circle, [0, 2])


@pytest.fixture
def cylinder_fixture():
    """Points on two parallels of the unit cylinder, two pencil spheres
    per parallel, and the cylinder polynomial."""
    pts, poly = gen_surface_points("cylinder", circles=2, per_circle=4)
    spheres = []
    for h in (0, 1):
        parallel = circle_through(Point3(1, 0, h), Point3(-1, 0, h), Point3(0, 1, h))
        spheres.extend(gen_sphere_pencil(parallel, [0, 2]))
    return pts, SphereSet(spheres), poly


@pytest.fixture
def torus_fixture():
    """Points on two parallels of the torus R=2, r=1, two pencil spheres
    per parallel, and the quartic polynomial."""
    pts, poly = gen_surface_points("torus", circles=2, per_circle=4)
    rings = {}
    for p in pts:
        rings.setdefault((p.z, p.x * p.x + p.y * p.y), []).append(p)
    spheres = []
    for ring in rings.values():
        parallel = circle_through(ring[0], ring[1], ring[2])
        spheres.extend(gen_sphere_pencil(parallel, [0, 2]))
    return pts, SphereSet(spheres), poly


def rational_unit_sphere_points(max_den=9):
    """All points (a, b, c)/d with a^2+b^2+c^2 = d^2, d <= max_den,
    deduplicated and sorted: a pool of exact points on the unit sphere."""
    pts = set()
    for d in range(1, max_den + 1):
        target = d * d
        for a in range(-d, d + 1):
            rem = target - a * a
            for b in range(-int(math.isqrt(rem)), int(math.isqrt(rem)) + 1):
                c2 = rem - b * b
                c = math.isqrt(c2)
                if c * c == c2:
                    for cc in {c, -c}:
                        pts.add(Point3(Fraction(a, d), Fraction(b, d), Fraction(cc, d)))
    return sorted(pts)
