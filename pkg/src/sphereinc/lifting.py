"""Lifting to the paraboloid in R^4 and point/hyperplane duality.

A point (x, y, z) lifts to (x, y, z, x^2+y^2+z^2); a sphere with center
(a, b, c) and squared radius r2 maps to the non-vertical hyperplane
x4 = 2a*x1 + 2b*x2 + 2c*x3 + (r2 - a^2 - b^2 - c^2).  Incidence is
preserved exactly, and the dual-space evaluation gives a second,
independent route to the on-sphere predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import Point3, Sphere, dot, on_sphere
from .rational import rat


@dataclass(frozen=True, order=True)
class Point4:
    x1: Fraction
    x2: Fraction
    x3: Fraction
    x4: Fraction

    def __post_init__(self):
        for f in ("x1", "x2", "x3", "x4"):
            object.__setattr__(self, f, rat(getattr(self, f)))

    def coords(self):
        return (self.x1, self.x2, self.x3, self.x4)


@dataclass(frozen=True, order=True)
class Hyperplane4:
    """Non-vertical hyperplane {x4 = e1*x1 + e2*x2 + e3*x3 + e0}."""

    e1: Fraction
    e2: Fraction
    e3: Fraction
    e0: Fraction

    def __post_init__(self):
        for f in ("e1", "e2", "e3", "e0"):
            object.__setattr__(self, f, rat(getattr(self, f)))

    def contains(self, p: Point4) -> bool:
        return p.x4 == self.e1 * p.x1 + self.e2 * p.x2 + self.e3 * p.x3 + self.e0


def lift_point(p: Point3) -> Point4:
    w = dot(p.coords(), p.coords())
    return Point4(p.x, p.y, p.z, w)


def sphere_to_hyperplane(s: Sphere) -> Hyperplane4:
    a, b, c = s.center.coords()
    return Hyperplane4(2 * a, 2 * b, 2 * c, s.radius_sq - (a * a + b * b + c * c))


def sphere_to_dual_point(s: Sphere) -> Point4:
    a, b, c = s.center.coords()
    return Point4(a, b, c, s.radius_sq - (a * a + b * b + c * c))


def point_to_dual_hyperplane(p: Point3) -> Hyperplane4:
    # alpha4 = -2x*alpha1 - 2y*alpha2 - 2z*alpha3 + (x^2+y^2+z^2)
    x, y, z = p.coords()
    return Hyperplane4(-2 * x, -2 * y, -2 * z, x * x + y * y + z * z)


def lifted_incidence(p: Point3, s: Sphere) -> bool:
    return sphere_to_hyperplane(s).contains(lift_point(p))


def dual_incidence(p: Point3, s: Sphere) -> bool:
    """Incidence evaluated purely in dual space; equals on_sphere(p, s)
    for all rational inputs."""
    return point_to_dual_hyperplane(p).contains(sphere_to_dual_point(s))


def incidence_routes_agree(p: Point3, s: Sphere) -> bool:
    """Convenience check: the primal, lifted and dual routes coincide."""
    primal = on_sphere(p, s)
    return primal == lifted_incidence(p, s) == dual_incidence(p, s)
