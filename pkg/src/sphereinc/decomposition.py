"""Complete-bipartite decomposition of the incidence graph.

G(P,S) splits into a residual edge set G0 plus blocks P_c x S_c, one per
rich circle c: P_c is exactly the set of input points on c and S_c
exactly the set of input spheres containing c.  Also houses the strong
degeneracy predicate, its quadruple witness, and the multiplicity
filter used for the small-m regime.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotDegenerate, NotIncident, SizeGuard, TooFewPoints
from .geom import (Circle3, Sphere, circle_in_sphere, circle_through,
                   cocircular, point_on_circle, sphere_pair_circle, on_sphere)
from .incidence import PointSet, SphereSet, incidences_bruteforce
from .surface import SurfacePoly, circle_in_variety

DEFAULT_PAIR_BUDGET = 2_000_000
DEFAULT_TRIPLE_BUDGET = 2_000_000


def incident_points(s: Sphere, P: PointSet):
    return [p for p in P if on_sphere(p, s)]


def strongly_degenerate(s: Sphere, P: PointSet) -> bool:
    """True iff all input points on s are cocircular (vacuously true for
    at most three points: points of a sphere are never collinear)."""
    return cocircular(incident_points(s, P))


def degenerate_replacement_circle(s: Sphere, P: PointSet) -> Circle3:
    """The unique circle through the incident points of a strongly
    degenerate sphere."""
    pts = incident_points(s, P)
    if len(pts) < 3:
        raise TooFewPoints(f"need >= 3 incident points, have {len(pts)}")
    if not cocircular(pts):
        raise NotDegenerate("sphere is not strongly degenerate")
    return circle_through(pts[0], pts[1], pts[2])


class NoWitness:
    """Sentinel: no non-cocircular quadruple exists."""

    def __repr__(self):
        return "NoWitness"

    def __eq__(self, other):
        return isinstance(other, NoWitness)

    def __hash__(self):
        return hash(NoWitness)


def quadruple_witness(p, s: Sphere, P: PointSet):
    """Three other incident points q, q', q'' such that {p, q, q', q''}
    is not cocircular, or NoWitness.

    If any third point lies off the circle through p and the first two
    others, that point completes a witness; if none does, the whole
    incident set is cocircular and no witness exists.
    """
    if not on_sphere(p, s):
        raise NotIncident(f"{p} is not on {s}")
    others = [q for q in incident_points(s, P) if q != p]
    if len(others) < 3:
        return NoWitness()
    base = circle_through(p, others[0], others[1])
    for q2 in others[2:]:
        if not point_on_circle(q2, base):
            return (others[0], others[1], q2)
    return NoWitness()


@dataclass(frozen=True)
class RichCircleBlock:
    circle: Circle3
    point_indices: tuple
    sphere_indices: tuple

    @property
    def edge_count(self) -> int:
        return len(self.point_indices) * len(self.sphere_indices)


@dataclass(frozen=True)
class Decomposition:
    residual_edges: tuple
    blocks: tuple
    stats: dict = field(compare=False)

    @property
    def residual_count(self) -> int:
        return len(self.residual_edges)


def enumerate_rich_circles(P: PointSet, S: SphereSet, V: SurfacePoly | None = None,
                           pair_budget: int = DEFAULT_PAIR_BUDGET,
                           triple_budget: int = DEFAULT_TRIPLE_BUDGET):
    """Candidate circles: pairwise sphere intersections plus circles
    through point triples lying on at least one sphere, deduplicated by
    canonical form and (optionally) filtered to circles on V."""
    n = len(S)
    if n * (n - 1) // 2 > pair_budget:
        raise SizeGuard(f"sphere pair budget exceeded: C({n},2) > {pair_budget}")
    graph = incidences_bruteforce(P, S)
    per_sphere = {}
    for i, j in graph.edges:
        per_sphere.setdefault(j, []).append(i)
    triples = sum(len(v) * (len(v) - 1) * (len(v) - 2) // 6 for v in per_sphere.values())
    if triples > triple_budget:
        raise SizeGuard(f"point triple budget exceeded: {triples} > {triple_budget}")

    candidates = set()
    for a in range(n):
        for b in range(a + 1, n):
            hit = sphere_pair_circle(S[a], S[b])
            if isinstance(hit, Circle3):
                candidates.add(hit)
    for idxs in per_sphere.values():
        k = len(idxs)
        for a in range(k):
            for b in range(a + 1, k):
                for c in range(b + 1, k):
                    # three points of one sphere are never collinear
                    candidates.add(circle_through(P[idxs[a]], P[idxs[b]], P[idxs[c]]))
    if V is not None:
        candidates = {c for c in candidates if circle_in_variety(c, V)}
    return sorted(candidates)


def decompose(P: PointSet, S: SphereSet, V: SurfacePoly | None = None,
              theta_p: int = 2, theta_s: int = 2,
              pair_budget: int = DEFAULT_PAIR_BUDGET,
              triple_budget: int = DEFAULT_TRIPLE_BUDGET) -> Decomposition:
    """Split G(P,S) into residual edges and rich-circle blocks.

    A circle is admitted as a block when it carries at least theta_p
    points and theta_s spheres.  Each incidence covered by some admitted
    block is assigned to the first such circle in canonical order;
    everything else lands in the residual set.
    """
    if theta_p < 1 or theta_s < 1:
        raise SizeGuard("thresholds must be >= 1")
    graph = incidences_bruteforce(P, S)
    circles = enumerate_rich_circles(P, S, V, pair_budget, triple_budget)
    blocks = []
    for c in circles:
        p_idx = tuple(i for i, p in enumerate(P) if point_on_circle(p, c))
        if len(p_idx) < theta_p:
            continue
        s_idx = tuple(j for j, s in enumerate(S) if circle_in_sphere(c, s))
        if len(s_idx) < theta_s:
            continue
        blocks.append(RichCircleBlock(c, p_idx, s_idx))

    memberships = [(set(b.point_indices), set(b.sphere_indices)) for b in blocks]
    residual = []
    assigned = [0] * len(blocks)
    for edge in graph.edges:
        i, j = edge
        for k, (ps, ss) in enumerate(memberships):
            if i in ps and j in ss:
                assigned[k] += 1
                break
        else:
            residual.append(edge)
    stats = {
        "incidences": graph.count,
        "residual": len(residual),
        "sum_points": sum(len(b.point_indices) for b in blocks),
        "sum_spheres": sum(len(b.sphere_indices) for b in blocks),
        "sum_products": sum(b.edge_count for b in blocks),
        "assigned": tuple(assigned),
    }
    return Decomposition(tuple(residual), tuple(blocks), stats)


def _integer_fourth_root(n: int) -> int:
    """Largest mu with mu^4 <= n."""
    if n <= 0:
        return 0
    mu = round(n ** 0.25)
    while mu**4 > n:
        mu -= 1
    while (mu + 1) ** 4 <= n:
        mu += 1
    return mu


def multiplicity_filter(blocks, n: int):
    """Split blocks at threshold multiplicity floor(n^(1/4)) on |S_c|.

    Returns (light, heavy, mu0).
    """
    mu0 = _integer_fourth_root(n)
    light = tuple(b for b in blocks if len(b.sphere_indices) <= mu0)
    heavy = tuple(b for b in blocks if len(b.sphere_indices) > mu0)
    return light, heavy, mu0


@dataclass
class VerificationReport:
    violations: list
    sum_points: int = 0
    sum_spheres: int = 0
    residual: int = 0
    incidences: int = 0
    per_point_circles: dict = field(default_factory=dict)
    per_sphere_circles: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_decomposition(d: Decomposition, P: PointSet, S: SphereSet,
                         V: SurfacePoly | None = None,
                         circles_per_point_cap: int | None = None,
                         popular_point_allowance: int = 2) -> VerificationReport:
    """Re-check every decomposition invariant by direct predicate
    evaluation; never silently passes."""
    report = VerificationReport(violations=[])
    graph = incidences_bruteforce(P, S)
    report.incidences = graph.count
    report.residual = d.residual_count
    report.sum_points = sum(len(b.point_indices) for b in d.blocks)
    report.sum_spheres = sum(len(b.sphere_indices) for b in d.blocks)

    seen_circles = set()
    for b in d.blocks:
        if b.circle in seen_circles:
            report.violations.append(f"duplicate block circle {b.circle}")
        seen_circles.add(b.circle)
        exact_p = tuple(i for i, p in enumerate(P) if point_on_circle(p, b.circle))
        if exact_p != tuple(sorted(b.point_indices)):
            report.violations.append(f"block P_c mismatch for {b.circle}")
        exact_s = tuple(j for j, s in enumerate(S) if circle_in_sphere(b.circle, s))
        if exact_s != tuple(sorted(b.sphere_indices)):
            report.violations.append(f"block S_c mismatch for {b.circle}")
        if V is not None and not circle_in_variety(b.circle, V):
            report.violations.append(f"block circle not on variety: {b.circle}")

    # Edge partition under first-block assignment.
    memberships = [(set(b.point_indices), set(b.sphere_indices)) for b in d.blocks]
    covered = []
    for edge in graph.edges:
        i, j = edge
        if not any(i in ps and j in ss for ps, ss in memberships):
            covered.append(edge)
    if tuple(covered) != d.residual_edges:
        dup = set(d.residual_edges) - set(covered)
        if dup:
            report.violations.append(
                f"residual edges also covered by a block: {sorted(dup)[:10]}")
        miss = set(covered) - set(d.residual_edges)
        if miss:
            report.violations.append(f"uncovered edges missing from residual: {sorted(miss)[:10]}")
    bad = set(d.residual_edges) - set(graph.edges)
    if bad:
        report.violations.append(f"residual edges not incidences: {sorted(bad)[:10]}")

    for b in d.blocks:
        for i in b.point_indices:
            report.per_point_circles[i] = report.per_point_circles.get(i, 0) + 1
        for j in b.sphere_indices:
            report.per_sphere_circles[j] = report.per_sphere_circles.get(j, 0) + 1

    if V is not None:
        deg = V.degree
        for j, cnt in report.per_sphere_circles.items():
            if cnt > deg:
                report.violations.append(
                    f"sphere {j} carries {cnt} block circles on V, above degree {deg}")
        cap = circles_per_point_cap if circles_per_point_cap is not None else 44 * deg * deg
        over = [i for i, cnt in report.per_point_circles.items() if cnt > cap]
        if len(over) > popular_point_allowance:
            report.violations.append(
                f"{len(over)} points exceed the {cap} circles-per-point cap: {over[:10]}")
    return report
