"""Trivariate surface polynomials and exact containment predicates.

A surface V is the zero set of a trivariate polynomial with rational
coefficients.  Circle containment is decided purely algebraically
(restrict to the carrier plane, then take the polynomial remainder
modulo the circle's quadratic); no point sampling, because circles
without rational points exist.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .geom import Circle3, Point3
from .rational import rat

DEFAULT_DEGREE_CAP = 8


class SurfacePoly:
    """Sparse trivariate polynomial: {(i, j, k): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, coeffs, max_degree=DEFAULT_DEGREE_CAP):
        terms = {}
        for expo, coeff in dict(coeffs).items():
            c = rat(coeff)
            if c == 0:
                continue
            i, j, k = (int(e) for e in expo)
            if i < 0 or j < 0 or k < 0:
                raise InputError(f"negative exponent in {expo}")
            terms[(i, j, k)] = c
        if not terms:
            raise InputError("surface polynomial must have a nonzero coefficient")
        deg = max(sum(e) for e in terms)
        if deg < 1:
            raise InputError("surface polynomial must have degree >= 1")
        if deg > max_degree:
            raise InputError(f"degree {deg} exceeds cap {max_degree}")
        self.terms = dict(sorted(terms.items()))

    @property
    def degree(self) -> int:
        return max(sum(e) for e in self.terms)

    def evaluate(self, p: Point3) -> Fraction:
        x, y, z = p.coords()
        total = Fraction(0)
        for (i, j, k), c in self.terms.items():
            total += c * x**i * y**j * z**k
        return total

    def __eq__(self, other):
        return isinstance(other, SurfacePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"SurfacePoly({self.terms!r})"


def on_variety(p: Point3, v: SurfacePoly) -> bool:
    return v.evaluate(p) == 0


# -- sparse bivariate helpers: {(i, j): Fraction} --------------------------


def _badd(a, b):
    out = dict(a)
    for e, c in b.items():
        nc = out.get(e, Fraction(0)) + c
        if nc == 0:
            out.pop(e, None)
        else:
            out[e] = nc
    return out


def _bmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1])
            nc = out.get(e, Fraction(0)) + ca * cb
            if nc == 0:
                out.pop(e, None)
            else:
                out[e] = nc
    return out


def _bscale(a, s):
    if s == 0:
        return {}
    return {e: c * s for e, c in a.items()}


def _bpow(a, n):
    out = {(0, 0): Fraction(1)}
    for _ in range(n):
        out = _bmul(out, a)
    return out


def _restrict_to_plane(v: SurfacePoly, plane):
    """Substitute the plane equation into v, eliminating the variable of
    the plane normal's pivot coordinate.  Returns (bivariate poly, pivot
    index, remaining index pair)."""
    n = plane.normal
    e = next(i for i, c in enumerate(n) if c != 0)  # canonical pivot, n[e] == 1
    rest = [i for i in range(3) if i != e]
    a, b = rest
    # x_e = offset - n_a * u - n_b * v
    lin = {}
    if plane.offset != 0:
        lin[(0, 0)] = plane.offset
    if n[a] != 0:
        lin[(1, 0)] = -n[a]
    if n[b] != 0:
        lin[(0, 1)] = -n[b]
    out = {}
    for expo, coeff in v.terms.items():
        term = _bpow(lin, expo[e])
        term = _bmul(term, {(expo[a], expo[b]): coeff})
        out = _badd(out, term)
    return out, e, (a, b)


def _circle_quadratic(c: Circle3, pivot, rest):
    """The carrier sphere quadratic restricted to the plane, as a
    bivariate polynomial in the two surviving coordinates."""
    n = c.carrier_plane.normal
    a, b = rest
    ctr = c.center.coords()
    lin = {}
    if c.carrier_plane.offset != 0:
        lin[(0, 0)] = c.carrier_plane.offset
    if n[a] != 0:
        lin[(1, 0)] = -n[a]
    if n[b] != 0:
        lin[(0, 1)] = -n[b]
    lin = _badd(lin, {(0, 0): -ctr[pivot]})
    q = _bmul(lin, lin)
    q = _badd(q, _bmul({(1, 0): Fraction(1), (0, 0): -ctr[a]},
                       {(1, 0): Fraction(1), (0, 0): -ctr[a]}))
    q = _badd(q, _bmul({(0, 1): Fraction(1), (0, 0): -ctr[b]},
                       {(0, 1): Fraction(1), (0, 0): -ctr[b]}))
    q = _badd(q, {(0, 0): -c.radius_sq})
    return q


def circle_in_variety(c: Circle3, v: SurfacePoly) -> bool:
    """True iff v vanishes identically on the circle.

    The surface polynomial is restricted to the carrier plane and then
    reduced modulo the circle's quadratic (whose leading coefficient in
    the chosen variable is a nonzero constant, so the division is exact
    over the rationals).  The circle is an irreducible real conic with
    infinitely many points, so the remainder vanishes identically iff
    the polynomial vanishes on the circle.
    """
    w, pivot, rest = _restrict_to_plane(v, c.carrier_plane)
    q = _circle_quadratic(c, pivot, rest)
    alpha = q[(2, 0)]  # 1 + n_a^2 > 0
    while True:
        top = [(e, co) for e, co in w.items() if e[0] >= 2]
        if not top:
            break
        e, co = max(top)
        w = _badd(w, _bscale(_bmul({(e[0] - 2, e[1]): Fraction(1)}, q), -co / alpha))
    return not w
