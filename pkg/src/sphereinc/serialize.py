"""JSON wire formats.

Rationals travel as "num/den" strings, points as 3-element arrays,
spheres as {center, radius_sq}, planes as {normal, offset}, circles as
{plane, sphere}, varieties as term lists.  Dumps are canonical (sorted
keys, fixed separators, trailing newline) so reruns are byte-identical.
"""

from __future__ import annotations

import json

from .errors import InputError
from .geom import Circle3, Plane, Point3, Sphere
from .incidence import IncidenceGraph, PointSet, SphereSet
from .lifting import Hyperplane4, Point4
from .rational import format_rational, parse_rational
from .surface import SurfacePoly


def encode_point(p: Point3):
    return [format_rational(c) for c in p.coords()]

def decode_point(data) -> Point3:
    if not isinstance(data, (list, tuple)) or len(data) != 3:
        raise InputError(f"point must be a 3-element array, got {data!r}")
    return Point3(*(parse_rational(c) for c in data))


def encode_point4(p: Point4):
    return [format_rational(c) for c in p.coords()]

def encode_hyperplane4(h: Hyperplane4):
    return {"coefficients": [format_rational(c) for c in (h.e1, h.e2, h.e3)],
            "constant": format_rational(h.e0)}


def encode_sphere(s: Sphere):
    return {"center": encode_point(s.center), "radius_sq": format_rational(s.radius_sq)}

def decode_sphere(data) -> Sphere:
    try:
        return Sphere(decode_point(data["center"]), parse_rational(data["radius_sq"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad sphere record: {data!r}") from exc


def encode_plane(p: Plane):
    return {"normal": [format_rational(c) for c in p.normal],
            "offset": format_rational(p.offset)}

def decode_plane(data) -> Plane:
    try:
        return Plane(tuple(parse_rational(c) for c in data["normal"]),
                     parse_rational(data["offset"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad plane record: {data!r}") from exc


def encode_circle(c: Circle3):
    return {"plane": encode_plane(c.carrier_plane), "sphere": encode_sphere(c.carrier_sphere)}

def decode_circle(data) -> Circle3:
    try:
        return Circle3(decode_plane(data["plane"]), decode_sphere(data["sphere"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad circle record: {data!r}") from exc


def encode_variety(v: SurfacePoly):
    return [{"exponents": list(e), "coeff": format_rational(c)} for e, c in v.terms.items()]

def decode_variety(data) -> SurfacePoly:
    try:
        return SurfacePoly({tuple(t["exponents"]): parse_rational(t["coeff"]) for t in data})
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad variety record: {data!r}") from exc


def encode_point_set(ps: PointSet):
    return {"points": [encode_point(p) for p in ps]}

def decode_point_set(data) -> PointSet:
    try:
        return PointSet(decode_point(p) for p in data["points"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad point set: {data!r}") from exc


def encode_sphere_set(ss: SphereSet):
    return {"spheres": [encode_sphere(s) for s in ss]}

def decode_sphere_set(data) -> SphereSet:
    try:
        return SphereSet(decode_sphere(s) for s in data["spheres"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad sphere set: {data!r}") from exc


def encode_graph(g: IncidenceGraph, include_edges=True):
    out = {"m": g.m, "n": g.n, "incidences": g.count}
    if include_edges:
        out["edges"] = [list(e) for e in g.edges]
    return out


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path, obj):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(obj))


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
