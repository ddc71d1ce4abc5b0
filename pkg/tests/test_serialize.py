from fractions import Fraction

import pytest

from sphereinc import (Plane, Point3, PointSet, Sphere, SphereSet,
                       circle_through, cylinder_poly, incidences_bruteforce,
                       lift_point, point_to_dual_hyperplane)
from sphereinc.errors import InputError
from sphereinc.rational import format_rational, parse_rational
from sphereinc import serialize as ser


def test_format_parse_rational():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-3)) == "-3"
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational(5) == Fraction(5)
    with pytest.raises(InputError):
        parse_rational("one half")
    with pytest.raises(InputError):
        parse_rational(0.5)


def test_point_roundtrip():
    p = Point3(Fraction(1, 3), -2, 0)
    assert ser.decode_point(ser.encode_point(p)) == p
    with pytest.raises(InputError):
        ser.decode_point([1, 2])


def test_sphere_plane_circle_roundtrip():
    s = Sphere(Point3(1, 2, 3), Fraction(7, 2))
    assert ser.decode_sphere(ser.encode_sphere(s)) == s
    pl = Plane((0, 0, 2), 4)
    assert ser.decode_plane(ser.encode_plane(pl)) == pl
    c = circle_through(Point3(1, 0, 0), Point3(0, 1, 0), Point3(-1, 0, 0))
    assert ser.decode_circle(ser.encode_circle(c)) == c
    with pytest.raises(InputError):
        ser.decode_sphere({"radius_sq": "1"})


def test_variety_roundtrip():
    v = cylinder_poly()
    assert ser.decode_variety(ser.encode_variety(v)).terms == v.terms


def test_set_roundtrips():
    pts = PointSet([Point3(0, 0, 0), Point3(Fraction(1, 2), 1, -1)])
    assert ser.decode_point_set(ser.encode_point_set(pts)) == pts
    sph = SphereSet([Sphere(Point3(0, 0, 0), 1), Sphere(Point3(1, 0, 0), 2)])
    assert ser.decode_sphere_set(ser.encode_sphere_set(sph)) == sph


def test_graph_encoding():
    pts = PointSet([Point3(1, 0, 0)])
    sph = SphereSet([Sphere(Point3(0, 0, 0), 1)])
    g = incidences_bruteforce(pts, sph)
    data = ser.encode_graph(g)
    assert data == {"m": 1, "n": 1, "incidences": 1, "edges": [[0, 0]]}
    assert "edges" not in ser.encode_graph(g, include_edges=False)


def test_lift_encodings():
    p4 = lift_point(Point3(1, 2, 3))
    assert ser.encode_point4(p4) == ["1", "2", "3", "14"]
    h = point_to_dual_hyperplane(Point3(1, 0, 0))
    data = ser.encode_hyperplane4(h)
    assert data == {"coefficients": ["-2", "0", "0"], "constant": "1"}


def test_dumps_canonical_stable():
    a = ser.dumps_canonical({"b": 1, "a": [1, 2]})
    b = ser.dumps_canonical({"a": [1, 2], "b": 1})
    assert a == b
    assert a.endswith("\n")


def test_read_json_missing_file(tmp_path):
    with pytest.raises(InputError):
        ser.read_json(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        ser.read_json(bad)
