"""Command-line interface.

Subcommands: gen, incidences, decompose, distances, experiment, verify.
All file formats are the canonical JSON forms from sphereinc.serialize,
so identical inputs and seeds reproduce output files byte for byte.
Exit codes: 0 success, 2 invariant violation, 3 input error.

Timing is opt-in (--timing): wall times vary between runs, so they are
kept out of output files unless explicitly requested.
"""

from __future__ import annotations

import functools
import sys

import click

from . import serialize
from .decomposition import decompose as run_decompose
from .decomposition import verify_decomposition, RichCircleBlock, Decomposition
from .distances import (distinct_distances, distinct_distances_bipartite,
                        unit_distances, unit_distances_bipartite)
from .errors import InputError, SizeGuard, SphereIncError, VerificationError
from .generators import (GeneratorSpec, gen_sphere_pencil, gen_surface_points,
                         run_spec)
from .harness import ExperimentConfig, run_experiment
from .incidence import (SphereSet, incidences_bruteforce, incidences_bucketed,
                        verify_graph)
from .rational import format_rational, parse_rational

EXIT_VIOLATION = 2
EXIT_INPUT = 3


def _handled(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except VerificationError as exc:
            click.echo(f"invariant violation: {exc}", err=True)
            sys.exit(EXIT_VIOLATION)
        except (InputError, SizeGuard) as exc:
            click.echo(f"input error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        except SphereIncError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
    return wrapper


@click.group()
def cli():
    """Exact point-sphere incidence tooling."""


@cli.command()
@click.option("--kind", required=True,
              type=click.Choice(["grid", "sphere_half", "cylinder", "torus",
                                 "sphere_pencil", "random_points", "random_spheres"]))
@click.option("--k", type=int, default=2, help="grid side")
@click.option("--depth", type=int, default=1, help="sphere_half search depth")
@click.option("--circles", type=int, default=2)
@click.option("--per-circle", type=int, default=4)
@click.option("--count", type=int, default=10, help="random generator size")
@click.option("--circle", "circle_file", type=click.Path(exists=True),
              help="circle JSON for sphere_pencil")
@click.option("--lambdas", default="0,1", help="comma-separated pencil parameters")
@click.option("--seed", type=int, default=0)
@click.option("--out", required=True, type=click.Path())
@_handled
def gen(kind, k, depth, circles, per_circle, count, circle_file, lambdas, seed, out):
    """Generate exact point or sphere configurations."""
    if kind == "sphere_pencil":
        if circle_file is None:
            raise InputError("sphere_pencil needs --circle")
        circle = serialize.decode_circle(serialize.read_json(circle_file))
        lam = [parse_rational(v) for v in lambdas.split(",")]
        spheres = gen_sphere_pencil(circle, lam)
        serialize.write_json(out, serialize.encode_sphere_set(spheres))
    elif kind in ("cylinder", "torus"):
        pts, poly = gen_surface_points(kind, circles, per_circle)
        payload = serialize.encode_point_set(pts)
        payload["variety"] = serialize.encode_variety(poly)
        serialize.write_json(out, payload)
    else:
        params = {"k": k, "depth": depth, "circles": circles, "per_circle": per_circle}
        spec = GeneratorSpec(kind, count=count, seed=seed, params=tuple(params.items()))
        result = run_spec(spec)
        if isinstance(result, SphereSet):
            serialize.write_json(out, serialize.encode_sphere_set(result))
        else:
            serialize.write_json(out, serialize.encode_point_set(result))
    click.echo(f"wrote {out}")


@cli.command()
@click.option("--points", "points_file", required=True, type=click.Path(exists=True))
@click.option("--spheres", "spheres_file", required=True, type=click.Path(exists=True))
@click.option("--engine", type=click.Choice(["brute", "bucketed"]), default="brute")
@click.option("--threads", type=int, default=1, help="accepted for interface parity; counting is single-process")
@click.option("--verify", is_flag=True, help="re-check against the brute-force oracle")
@click.option("--timing", is_flag=True, help="include wall time in the report (breaks byte-identical reruns)")
@click.option("--out", required=True, type=click.Path())
@_handled
def incidences(points_file, spheres_file, engine, threads, verify, timing, out):
    """Count point-sphere incidences."""
    import time
    pts = serialize.decode_point_set(serialize.read_json(points_file))
    sph = serialize.decode_sphere_set(serialize.read_json(spheres_file))
    count = incidences_bucketed if engine == "bucketed" else incidences_bruteforce
    t0 = time.monotonic()
    graph = count(pts, sph)
    elapsed = time.monotonic() - t0
    if verify:
        problems = verify_graph(graph, pts, sph)
        if problems:
            raise VerificationError("; ".join(problems))
    report = serialize.encode_graph(graph)
    report["engine"] = engine
    if timing:
        report["wall_time"] = elapsed
    serialize.write_json(out, report)
    click.echo(f"I(P,S) = {graph.count} ({engine}); wrote {out}")


@cli.command("decompose")
@click.option("--points", "points_file", required=True, type=click.Path(exists=True))
@click.option("--spheres", "spheres_file", required=True, type=click.Path(exists=True))
@click.option("--variety", "variety_file", type=click.Path(exists=True))
@click.option("--theta-p", type=int, default=2)
@click.option("--theta-s", type=int, default=2)
@click.option("--verify", is_flag=True)
@click.option("--out", required=True, type=click.Path())
@_handled
def decompose_cmd(points_file, spheres_file, variety_file, theta_p, theta_s, verify, out):
    """Produce the residual + rich-circle-block decomposition."""
    pts = serialize.decode_point_set(serialize.read_json(points_file))
    sph = serialize.decode_sphere_set(serialize.read_json(spheres_file))
    poly = None
    if variety_file:
        data = serialize.read_json(variety_file)
        poly = serialize.decode_variety(data["variety"] if isinstance(data, dict) else data)
    d = run_decompose(pts, sph, poly, theta_p=theta_p, theta_s=theta_s)
    if verify:
        report = verify_decomposition(d, pts, sph, poly)
        if not report.ok:
            raise VerificationError("; ".join(report.violations))
    serialize.write_json(out, _encode_decomposition(d))
    click.echo(f"{len(d.blocks)} blocks, |G0| = {d.residual_count}; wrote {out}")


def _encode_decomposition(d: Decomposition):
    return {
        "residual_edges": [list(e) for e in d.residual_edges],
        "blocks": [
            {"circle": serialize.encode_circle(b.circle),
             "point_indices": list(b.point_indices),
             "sphere_indices": list(b.sphere_indices)}
            for b in d.blocks
        ],
        "stats": {k: (list(v) if isinstance(v, tuple) else v) for k, v in d.stats.items()},
    }


def _decode_decomposition(data) -> Decomposition:
    try:
        blocks = tuple(
            RichCircleBlock(serialize.decode_circle(b["circle"]),
                            tuple(b["point_indices"]), tuple(b["sphere_indices"]))
            for b in data["blocks"])
        residual = tuple(tuple(e) for e in data["residual_edges"])
        return Decomposition(residual, blocks, dict(data.get("stats", {})))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad decomposition file: {exc}") from exc


@cli.command("distances")
@click.option("--points", "points_file", required=True, type=click.Path(exists=True))
@click.option("--points2", "points2_file", type=click.Path(exists=True))
@click.option("--unit", is_flag=True, help="also report the unit-distance count")
@click.option("--out", required=True, type=click.Path())
@_handled
def distances_cmd(points_file, points2_file, unit, out):
    """Distinct-distance census (mono- or bipartite)."""
    pts = serialize.decode_point_set(serialize.read_json(points_file))
    if points2_file:
        pts2 = serialize.decode_point_set(serialize.read_json(points2_file))
        census = distinct_distances_bipartite(pts, pts2)
        payload = {"mode": "bipartite", "zero_count": census.zero_count}
        if unit:
            payload["unit_count"] = unit_distances_bipartite(pts, pts2)
    else:
        census = distinct_distances(pts)
        payload = {"mode": "mono"}
        if unit:
            payload["unit_count"] = unit_distances(pts)
    payload["t"] = census.t
    payload["histogram"] = {format_rational(k): v for k, v in census.histogram.items()}
    serialize.write_json(out, payload)
    click.echo(f"t = {census.t}; wrote {out}")


@cli.command("experiment")
@click.option("--family", required=True,
              type=click.Choice(["grid-distinct", "grid-unit", "sphere-half-unit",
                                 "pencil-incidence"]))
@click.option("--sizes", required=True, help="comma-separated strictly increasing ladder")
@click.option("--engine", type=click.Choice(["brute", "bucketed"]), default="brute")
@click.option("--seed", type=int, default=0)
@click.option("--verify", is_flag=True)
@click.option("--timing", is_flag=True)
@click.option("--out", required=True, type=click.Path())
@_handled
def experiment_cmd(family, sizes, engine, seed, verify, timing, out):
    """Run a scaling ladder and fit the growth exponent."""
    try:
        ladder = [int(v) for v in sizes.split(",")]
    except ValueError as exc:
        raise InputError(f"bad --sizes {sizes!r}") from exc
    cfg = ExperimentConfig(family=family, sizes=ladder, engine=engine, seed=seed,
                           verify=verify, include_timing=timing)
    report = run_experiment(cfg)
    serialize.write_json(out, report.to_json())
    click.echo(f"alpha = {report.alpha:.4f} (reference {report.reference_exponent:.4f}); wrote {out}")


@cli.command("verify")
@click.option("--decomp", "decomp_file", required=True, type=click.Path(exists=True))
@click.option("--points", "points_file", required=True, type=click.Path(exists=True))
@click.option("--spheres", "spheres_file", required=True, type=click.Path(exists=True))
@click.option("--variety", "variety_file", type=click.Path(exists=True))
@click.option("--out", type=click.Path())
@_handled
def verify_cmd(decomp_file, points_file, spheres_file, variety_file, out):
    """Re-verify a stored decomposition against its inputs."""
    pts = serialize.decode_point_set(serialize.read_json(points_file))
    sph = serialize.decode_sphere_set(serialize.read_json(spheres_file))
    poly = None
    if variety_file:
        data = serialize.read_json(variety_file)
        poly = serialize.decode_variety(data["variety"] if isinstance(data, dict) else data)
    d = _decode_decomposition(serialize.read_json(decomp_file))
    report = verify_decomposition(d, pts, sph, poly)
    if out:
        serialize.write_json(out, {
            "ok": report.ok,
            "violations": report.violations,
            "incidences": report.incidences,
            "residual": report.residual,
            "sum_points": report.sum_points,
            "sum_spheres": report.sum_spheres,
        })
    if not report.ok:
        raise VerificationError("; ".join(report.violations))
    click.echo("decomposition verified")


def main():
    cli()


if __name__ == "__main__":
    main()
