"""Distinct and repeated distance counting, and the reduction from
distance problems to point-sphere incidences.

All distances are handled as squared rationals: equality of distances is
equality of squared distances, so nothing irrational is ever needed.
Pair enumeration uses a scaled integer domain, vectorized with int64
numpy when the magnitudes allow it (checked, with a big-int fallback).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CoincidentPoints, InputError, TooFewPoints
from .geom import Circle3, Empty, Plane, Point3, Sphere, dot, squared_distance
from .incidence import PointSet, SphereSet, _common_scale, _int_coords


@dataclass
class DistanceCensus:
    """Histogram of squared distances over a pair family."""

    histogram: dict = field(default_factory=dict)  # Fraction -> pair count
    zero_count: int = 0  # coincident pairs, reported separately

    @property
    def t(self) -> int:
        return len(self.histogram)

    @property
    def total_pairs(self) -> int:
        return sum(self.histogram.values()) + self.zero_count

    def distinct(self):
        return sorted(self.histogram)


_INT64_GUARD = 2**62


def _int64_safe(coords) -> bool:
    peak = max((max(abs(v) for v in c) for c in coords), default=0)
    return 12 * peak * peak < _INT64_GUARD


def _pair_histogram_numpy(coords):
    arr = np.array(coords, dtype=np.int64)
    n = len(coords)
    hist = {}
    chunk = max(1, 4_000_000 // max(1, n))
    for lo in range(0, n, chunk):
        block = arr[lo:lo + chunk]
        diff = block[:, None, :] - arr[None, lo:, :]
        dd = (diff * diff).sum(axis=2)
        # keep only pairs (i, j) with global i < j
        rows, cols = np.nonzero(np.triu(np.ones(dd.shape, dtype=bool), k=1))
        vals, counts = np.unique(dd[rows, cols], return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            hist[v] = hist.get(v, 0) + c
    return hist


def _pair_histogram_python(coords):
    hist = {}
    for (x1, y1, z1), (x2, y2, z2) in itertools.combinations(coords, 2):
        dx, dy, dz = x1 - x2, y1 - y2, z1 - z2
        dd = dx * dx + dy * dy + dz * dz
        hist[dd] = hist.get(dd, 0) + 1
    return hist


def distinct_distances(P: PointSet) -> DistanceCensus:
    """Exact census of the C(|P|, 2) pairwise squared distances."""
    if len(P) < 2:
        raise TooFewPoints("distinct_distances needs at least 2 points")
    scale = _common_scale(P.points, [])
    coords = [_int_coords(p, scale) for p in P.points]
    if _int64_safe(coords):
        raw = _pair_histogram_numpy(coords)
    else:
        raw = _pair_histogram_python(coords)
    den = scale * scale
    census = DistanceCensus()
    for dd, cnt in sorted(raw.items()):
        census.histogram[Fraction(int(dd), den)] = int(cnt)
    return census


def distinct_distances_bipartite(P1: PointSet, P2: PointSet) -> DistanceCensus:
    """Census over all |P1| x |P2| cross pairs.  Zero distances (shared
    points) are excluded from t and reported in zero_count."""
    if len(P1) == 0 or len(P2) == 0:
        raise TooFewPoints("bipartite census needs nonempty sets")
    scale = _common_scale(list(P1.points) + list(P2.points), [])
    c1 = [_int_coords(p, scale) for p in P1.points]
    c2 = [_int_coords(p, scale) for p in P2.points]
    census = DistanceCensus()
    raw = {}
    if _int64_safe(c1 + c2):
        a1 = np.array(c1, dtype=np.int64)
        a2 = np.array(c2, dtype=np.int64)
        diff = a1[:, None, :] - a2[None, :, :]
        dd = (diff * diff).sum(axis=2)
        vals, counts = np.unique(dd, return_counts=True)
        raw = dict(zip(vals.tolist(), counts.tolist()))
    else:
        for u in c1:
            for v in c2:
                dd = sum((a - b) ** 2 for a, b in zip(u, v))
                raw[dd] = raw.get(dd, 0) + 1
    den = scale * scale
    for dd, cnt in sorted(raw.items()):
        if dd == 0:
            census.zero_count = int(cnt)
        else:
            census.histogram[Fraction(int(dd), den)] = int(cnt)
    return census


def unit_distances(P: PointSet) -> int:
    """Number of unordered point pairs at squared distance exactly 1."""
    if len(P) < 2:
        return 0
    census = distinct_distances(P)
    return census.histogram.get(Fraction(1), 0)


def unit_distances_bipartite(P1: PointSet, P2: PointSet) -> int:
    """Number of ordered cross pairs at squared distance exactly 1."""
    if len(P1) == 0 or len(P2) == 0:
        return 0
    census = distinct_distances_bipartite(P1, P2)
    return census.histogram.get(Fraction(1), 0)


def center_locus_circle(p: Point3, q: Point3):
    """Locus of centers of unit spheres through both p and q: a circle
    in the perpendicular bisector plane, Empty beyond distance 2, and a
    degenerate single point (flagged Empty) at exactly distance 2."""
    if p == q:
        raise CoincidentPoints("center_locus_circle needs distinct points")
    d2 = squared_distance(p, q)
    mid = Point3((p.x + q.x) / 2, (p.y + q.y) / 2, (p.z + q.z) / 2)
    if d2 > 4:
        return Empty("disjoint_or_nested")
    if d2 == 4:
        return Empty("degenerate", mid)
    n = q - p
    plane = Plane(n, dot(n, mid.coords()))
    return Circle3(plane, Sphere(mid, 1 - d2 / 4))


def reduction_spheres_for_distinct(P2: PointSet, census: DistanceCensus) -> SphereSet:
    """For each center q in P2, one sphere per distinct nonzero squared
    distance in the census: exactly |P2| * t spheres."""
    radii = census.distinct()
    if not radii:
        raise InputError("census has no nonzero distances")
    spheres = []
    for q in P2:
        for r2 in radii:
            spheres.append(Sphere(q, r2))
    return SphereSet(spheres)
