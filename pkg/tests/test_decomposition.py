from fractions import Fraction

import pytest

from sphereinc import (Decomposition, NoWitness, Point3, PointSet, Sphere,
                       SphereSet, decompose, degenerate_replacement_circle,
                       enumerate_rich_circles, multiplicity_filter,
                       point_on_circle, quadruple_witness, strongly_degenerate,
                       verify_decomposition)
from sphereinc.decomposition import RichCircleBlock, _integer_fourth_root
from sphereinc.errors import NotDegenerate, NotIncident, SizeGuard, TooFewPoints

UNIT = Sphere(Point3(0, 0, 0), 1)
SQUARE = [Point3(1, 0, 0), Point3(-1, 0, 0), Point3(0, 1, 0), Point3(0, -1, 0)]


def test_strongly_degenerate():
    assert strongly_degenerate(UNIT, PointSet(SQUARE))
    assert strongly_degenerate(UNIT, PointSet([Point3(1, 0, 0)]))
    assert strongly_degenerate(UNIT, PointSet([Point3(5, 5, 5)]))  # vacuous
    assert not strongly_degenerate(UNIT, PointSet(SQUARE + [Point3(0, 0, 1)]))


def test_degenerate_replacement_circle():
    c = degenerate_replacement_circle(UNIT, PointSet(SQUARE))
    assert c.center == Point3(0, 0, 0)
    assert c.radius_sq == 1
    with pytest.raises(TooFewPoints):
        degenerate_replacement_circle(UNIT, PointSet([Point3(1, 0, 0)]))
    with pytest.raises(NotDegenerate):
        degenerate_replacement_circle(UNIT, PointSet(SQUARE + [Point3(0, 0, 1)]))


def test_quadruple_witness_found():
    P = PointSet(SQUARE + [Point3(0, 0, 1)])
    w = quadruple_witness(Point3(1, 0, 0), UNIT, P)
    assert w != NoWitness()
    q, q2, q3 = w
    from sphereinc import cocircular, on_sphere
    assert not cocircular([Point3(1, 0, 0), q, q2, q3])
    for pt in (q, q2, q3):
        assert on_sphere(pt, UNIT)


def test_quadruple_witness_absent():
    P = PointSet(SQUARE)
    assert quadruple_witness(Point3(1, 0, 0), UNIT, P) == NoWitness()
    # fewer than three other incident points: vacuously no witness
    assert quadruple_witness(Point3(1, 0, 0), UNIT, PointSet(SQUARE[:2])) == NoWitness()


def test_quadruple_witness_requires_incidence():
    with pytest.raises(NotIncident):
        quadruple_witness(Point3(0, 0, 0), UNIT, PointSet(SQUARE))


def test_witness_iff_not_degenerate():
    P = PointSet(SQUARE + [Point3(0, 0, 1), Point3(0, 0, -1)])
    for p in SQUARE:
        assert quadruple_witness(p, UNIT, P) != NoWitness()
    assert not strongly_degenerate(UNIT, P)


def test_enumerate_rich_circles_pencil(pencil_fixture):
    pts, sph = pencil_fixture
    circles = enumerate_rich_circles(pts, sph)
    assert len(circles) == 1
    c = circles[0]
    assert c.center == Point3(0, 0, 0) and c.radius_sq == 1


def test_enumerate_rich_circles_variety_filter(cylinder_fixture):
    pts, sph, poly = cylinder_fixture
    unfiltered = enumerate_rich_circles(pts, sph)
    filtered = enumerate_rich_circles(pts, sph, poly)
    assert set(filtered) <= set(unfiltered)
    assert len(filtered) == 2  # the two parallels z=0, z=1


def test_enumerate_rich_circles_budgets():
    pts = PointSet(SQUARE)
    sph = SphereSet([UNIT, Sphere(Point3(0, 0, -1), 2), Sphere(Point3(0, 0, 1), 2)])
    with pytest.raises(SizeGuard):
        enumerate_rich_circles(pts, sph, pair_budget=1)
    with pytest.raises(SizeGuard):
        enumerate_rich_circles(pts, sph, triple_budget=1)


def test_decompose_pencil(pencil_fixture):
    pts, sph = pencil_fixture
    d = decompose(pts, sph)
    assert len(d.blocks) == 1
    b = d.blocks[0]
    assert b.point_indices == (0, 1, 2, 3)
    assert b.sphere_indices == (0, 1)
    assert b.edge_count == 8
    assert d.residual_edges == ()
    assert d.stats["incidences"] == 8
    assert d.stats["residual"] == 0
    assert d.stats["sum_products"] == 8
    assert d.stats["assigned"] == (8,)


def test_decompose_single_sphere_residual():
    # One sphere through 4 non-cocircular points: with theta_s=2 no
    # circle is admitted, so all 4 incidences are residual.
    pts = PointSet(SQUARE[:3] + [Point3(0, 0, 1)])
    sph = SphereSet([UNIT])
    d = decompose(pts, sph, theta_s=2)
    assert d.blocks == ()
    assert d.residual_count == 4
    # with theta_s=1 every rich-enough circle is admitted
    d1 = decompose(pts, sph, theta_s=1)
    assert d1.residual_count == 0
    assert all(len(b.sphere_indices) == 1 for b in d1.blocks)


def test_decompose_partition_exact(cylinder_fixture):
    pts, sph, poly = cylinder_fixture
    d = decompose(pts, sph, poly)
    total = sum(d.stats["assigned"]) + d.residual_count
    assert total == d.stats["incidences"]
    rep = verify_decomposition(d, pts, sph, poly)
    assert rep.ok, rep.violations


def test_decompose_torus(torus_fixture):
    pts, sph, poly = torus_fixture
    d = decompose(pts, sph, poly)
    assert len(d.blocks) == 2
    rep = verify_decomposition(d, pts, sph, poly)
    assert rep.ok, rep.violations
    assert max(rep.per_sphere_circles.values()) <= poly.degree


def test_decompose_threshold_validation(pencil_fixture):
    pts, sph = pencil_fixture
    with pytest.raises(SizeGuard):
        decompose(pts, sph, theta_p=0)


def test_integer_fourth_root():
    assert _integer_fourth_root(0) == 0
    assert _integer_fourth_root(1) == 1
    assert _integer_fourth_root(15) == 1
    assert _integer_fourth_root(16) == 2
    assert _integer_fourth_root(80) == 2
    assert _integer_fourth_root(81) == 3
    big = 10**40
    mu = _integer_fourth_root(big)
    assert mu**4 <= big < (mu + 1) ** 4


def test_multiplicity_filter(pencil_fixture):
    pts, sph = pencil_fixture
    d = decompose(pts, sph)
    light, heavy, mu0 = multiplicity_filter(d.blocks, 16)
    assert mu0 == 2
    assert light == d.blocks and heavy == ()
    light, heavy, mu0 = multiplicity_filter(d.blocks, 15)
    assert mu0 == 1
    assert heavy == d.blocks and light == ()


def test_verify_decomposition_catches_corruption(pencil_fixture):
    pts, sph = pencil_fixture
    d = decompose(pts, sph)
    # an edge both covered by the block and kept as residual
    bad = Decomposition(((0, 0),), d.blocks, dict(d.stats))
    rep = verify_decomposition(bad, pts, sph)
    assert not rep.ok
    assert any("residual" in v for v in rep.violations)


def test_verify_decomposition_catches_wrong_block(pencil_fixture):
    pts, sph = pencil_fixture
    d = decompose(pts, sph)
    b = d.blocks[0]
    shrunk = RichCircleBlock(b.circle, b.point_indices[:3], b.sphere_indices)
    bad = Decomposition(d.residual_edges, (shrunk,), dict(d.stats))
    rep = verify_decomposition(bad, pts, sph)
    assert not rep.ok
    assert any("P_c mismatch" in v for v in rep.violations)


def test_verify_decomposition_variety_violation(pencil_fixture):
    from sphereinc import cylinder_poly
    pts, sph = pencil_fixture
    d = decompose(pts, sph)
    # shifted cylinder: the equator block circle is not on it
    from sphereinc import SurfacePoly
    off = SurfacePoly({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 0): -Fraction(4)})
    rep = verify_decomposition(d, pts, sph, off)
    assert not rep.ok
    assert any("variety" in v for v in rep.violations)
    # the true carrier cylinder accepts it
    rep_ok = verify_decomposition(d, pts, sph, cylinder_poly())
    assert rep_ok.ok, rep_ok.violations


def test_block_points_lie_on_circle(cylinder_fixture):
    pts, sph, poly = cylinder_fixture
    d = decompose(pts, sph, poly)
    for b in d.blocks:
        for i in b.point_indices:
            assert point_on_circle(pts[i], b.circle)
