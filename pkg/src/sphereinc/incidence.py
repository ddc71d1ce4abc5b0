"""Bipartite point-sphere incidence graphs.

Two counting engines produce the same edge set: a quadratic brute-force
oracle, and a bucketed engine that groups spheres by squared radius and
hashes points into a uniform grid so each sphere only probes cells that
can meet its shell.  Both work in a scaled integer domain (all
coordinates multiplied by a common denominator), so every comparison is
exact; bucketing only prunes, predicates decide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DuplicateItem, SizeGuard
from .geom import Point3, Sphere

_K33_DEFAULT_LIMIT = 400


class PointSet:
    """Indexed, duplicate-free list of points."""

    def __init__(self, points):
        seen = set()
        items = []
        for p in points:
            if p in seen:
                raise DuplicateItem(f"duplicate point {p}")
            seen.add(p)
            items.append(p)
        self.points = tuple(items)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points


class SphereSet:
    """Indexed, duplicate-free list of spheres."""

    def __init__(self, spheres):
        seen = set()
        items = []
        for s in spheres:
            if s in seen:
                raise DuplicateItem(f"duplicate sphere {s}")
            seen.add(s)
            items.append(s)
        self.spheres = tuple(items)

    def __len__(self):
        return len(self.spheres)

    def __iter__(self):
        return iter(self.spheres)

    def __getitem__(self, i):
        return self.spheres[i]

    def __eq__(self, other):
        return isinstance(other, SphereSet) and self.spheres == other.spheres


@dataclass(frozen=True)
class IncidenceGraph:
    """Edges (point index, sphere index), lexicographically sorted."""

    m: int
    n: int
    edges: tuple

    @property
    def count(self) -> int:
        return len(self.edges)


def _common_scale(points, centers):
    """LCM of all coordinate denominators; integerizes the instance."""
    scale = 1
    for p in points:
        for c in (p.x, p.y, p.z):
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    for p in centers:
        for c in (p.x, p.y, p.z):
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return scale


def _int_coords(p: Point3, scale: int):
    return (
        p.x.numerator * (scale // p.x.denominator),
        p.y.numerator * (scale // p.y.denominator),
        p.z.numerator * (scale // p.z.denominator),
    )


def _scaled_instance(P: PointSet, S: SphereSet):
    scale = _common_scale(P.points, [s.center for s in S.spheres])
    pts = [_int_coords(p, scale) for p in P.points]
    sph = []
    for s in S.spheres:
        rn, rd = s.radius_sq.numerator, s.radius_sq.denominator
        sph.append((_int_coords(s.center, scale), rd, rn * scale * scale))
    return scale, pts, sph


def incidences_bruteforce(P: PointSet, S: SphereSet) -> IncidenceGraph:
    """Oracle path: test every (point, sphere) pair exactly."""
    _, pts, sph = _scaled_instance(P, S)
    edges = []
    for j, (ctr, rd, rn_l2) in enumerate(sph):
        cx, cy, cz = ctr
        for i, (x, y, z) in enumerate(pts):
            dx, dy, dz = x - cx, y - cy, z - cz
            if (dx * dx + dy * dy + dz * dz) * rd == rn_l2:
                edges.append((i, j))
    edges.sort()
    return IncidenceGraph(len(P), len(S), tuple(edges))


def _cell_side(rd: int, rn_l2: int) -> int:
    """Integer grid side within a factor 2 of the scaled radius."""
    return max(1, math.isqrt(rn_l2 // rd))


def _cell_shell_test(cell, side, ctr, rd, rn_l2) -> bool:
    """Can the cell cube contain a point at exact scaled distance r
    from ctr?  Compares min/max squared cube distance against r^2."""
    min_d2 = 0
    max_d2 = 0
    for a, c in zip(cell, ctr):
        lo = a * side
        hi = lo + side
        if c < lo:
            near, far = lo - c, hi - c
        elif c > hi:
            near, far = c - hi, c - lo
        else:
            near, far = 0, max(c - lo, hi - c)
        min_d2 += near * near
        max_d2 += far * far
    return min_d2 * rd <= rn_l2 <= max_d2 * rd


def incidences_bucketed(P: PointSet, S: SphereSet) -> IncidenceGraph:
    """Accelerated path; identical edge set to the brute-force oracle."""
    _, pts, sph = _scaled_instance(P, S)
    by_radius = {}
    for j, (ctr, rd, rn_l2) in enumerate(sph):
        by_radius.setdefault((rd, rn_l2), []).append((j, ctr))
    edges = []
    for (rd, rn_l2), group in by_radius.items():
        side = _cell_side(rd, rn_l2)
        grid = {}
        for i, (x, y, z) in enumerate(pts):
            grid.setdefault((x // side, y // side, z // side), []).append(i)
        reach = math.isqrt(rn_l2 // rd) + 1
        for j, ctr in group:
            cx, cy, cz = ctr
            lo = ((cx - reach) // side, (cy - reach) // side, (cz - reach) // side)
            hi = ((cx + reach) // side, (cy + reach) // side, (cz + reach) // side)
            for ax in range(lo[0], hi[0] + 1):
                for ay in range(lo[1], hi[1] + 1):
                    for az in range(lo[2], hi[2] + 1):
                        cell = (ax, ay, az)
                        bucket = grid.get(cell)
                        if not bucket:
                            continue
                        if not _cell_shell_test(cell, side, ctr, rd, rn_l2):
                            continue
                        for i in bucket:
                            x, y, z = pts[i]
                            dx, dy, dz = x - cx, y - cy, z - cz
                            if (dx * dx + dy * dy + dz * dz) * rd == rn_l2:
                                edges.append((i, j))
    edges.sort()
    return IncidenceGraph(len(P), len(S), tuple(edges))


def unit_incidences(P: PointSet, centers: PointSet) -> IncidenceGraph:
    """Edges (i, j) with |P[i] - centers[j]|^2 = 1 exactly."""
    unit = SphereSet([Sphere(c, Fraction(1)) for c in centers])
    return incidences_bruteforce(P, unit)


def contains_k33(g: IncidenceGraph, limit: int = _K33_DEFAULT_LIMIT):
    """Search for a complete bipartite 3x3 subgraph.

    Returns (found, witness) where witness is (point indices, sphere
    indices) when found.  Intended for small instances; raises SizeGuard
    past the configured limit.
    """
    if g.m > limit or g.n > limit:
        raise SizeGuard(f"contains_k33 limited to {limit} points/spheres")
    masks = [0] * g.n
    for i, j in g.edges:
        masks[j] |= 1 << i
    rich = [j for j in range(g.n) if masks[j].bit_count() >= 3]
    for a in range(len(rich)):
        ja = rich[a]
        for b in range(a + 1, len(rich)):
            jb = rich[b]
            pair = masks[ja] & masks[jb]
            if pair.bit_count() < 3:
                continue
            for c in range(b + 1, len(rich)):
                jc = rich[c]
                common = pair & masks[jc]
                if common.bit_count() >= 3:
                    pts = []
                    i = 0
                    while len(pts) < 3:
                        if common >> i & 1:
                            pts.append(i)
                        i += 1
                    return True, (tuple(pts), (ja, jb, jc))
    return False, None


def verify_graph(g: IncidenceGraph, P: PointSet, S: SphereSet):
    """Exact re-verification: every edge satisfies on_sphere and no
    incident pair is missing.  Returns a list of violation strings."""
    oracle = incidences_bruteforce(P, S)
    if oracle.edges == g.edges:
        return []
    missing = set(oracle.edges) - set(g.edges)
    extra = set(g.edges) - set(oracle.edges)
    out = []
    if missing:
        out.append(f"missing edges: {sorted(missing)[:10]}")
    if extra:
        out.append(f"non-incident edges: {sorted(extra)[:10]}")
    return out
