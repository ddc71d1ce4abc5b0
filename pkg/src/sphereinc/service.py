"""FastAPI service wrapping the core package.

Exposes the same operations as the CLI over HTTP for multi-client use;
payloads reuse the canonical JSON wire formats (rationals as "num/den"
strings).  Run with:  uvicorn sphereinc.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import serialize
from .decomposition import decompose, verify_decomposition
from .distances import (distinct_distances, distinct_distances_bipartite,
                        unit_distances, unit_distances_bipartite)
from .errors import InputError, SizeGuard, SphereIncError
from .generators import GeneratorSpec, run_spec
from .harness import ExperimentConfig, run_experiment
from .incidence import SphereSet, incidences_bruteforce, incidences_bucketed
from .rational import format_rational

app = FastAPI(title="sphereinc", version="0.1.0")

Point = list[str]


class SphereModel(BaseModel):
    center: Point
    radius_sq: str


class IncidenceRequest(BaseModel):
    points: list[Point]
    spheres: list[SphereModel]
    engine: str = "brute"


class IncidenceResponse(BaseModel):
    m: int
    n: int
    incidences: int
    engine: str
    edges: list[list[int]]


class DecomposeRequest(BaseModel):
    points: list[Point]
    spheres: list[SphereModel]
    variety: list[dict] | None = None
    theta_p: int = 2
    theta_s: int = 2
    verify: bool = False


class BlockModel(BaseModel):
    circle: dict
    point_indices: list[int]
    sphere_indices: list[int]


class DecomposeResponse(BaseModel):
    residual_edges: list[list[int]]
    blocks: list[BlockModel]
    stats: dict
    verified: bool | None = None
    violations: list[str] = Field(default_factory=list)


class DistancesRequest(BaseModel):
    points: list[Point]
    points2: list[Point] | None = None
    unit: bool = False


class DistancesResponse(BaseModel):
    mode: str
    t: int
    histogram: dict[str, int]
    zero_count: int = 0
    unit_count: int | None = None


class GenerateRequest(BaseModel):
    kind: str
    count: int = 10
    seed: int = 0
    params: dict = Field(default_factory=dict)


class GenerateResponse(BaseModel):
    points: list[Point] | None = None
    spheres: list[SphereModel] | None = None


class ExperimentRequest(BaseModel):
    family: str
    sizes: list[int]
    engine: str = "brute"
    seed: int = 0
    verify: bool = False


class ExperimentResponse(BaseModel):
    family: str
    quantity: str
    rows: list[dict]
    fitted_exponent: float
    fit_residual: float
    reference_exponent: float
    footer: str


def _bad_request(exc: SphereIncError):
    status = 422 if isinstance(exc, (InputError, SizeGuard)) else 500
    return HTTPException(status_code=status, detail=str(exc))


def _decode_instance(points, spheres):
    pts = serialize.decode_point_set({"points": points})
    sph = serialize.decode_sphere_set({"spheres": [s.model_dump() for s in spheres]})
    return pts, sph


@app.post("/incidences", response_model=IncidenceResponse)
def incidences_endpoint(req: IncidenceRequest):
    try:
        pts, sph = _decode_instance(req.points, req.spheres)
        count = incidences_bucketed if req.engine == "bucketed" else incidences_bruteforce
        graph = count(pts, sph)
    except SphereIncError as exc:
        raise _bad_request(exc) from exc
    return IncidenceResponse(m=graph.m, n=graph.n, incidences=graph.count,
                             engine=req.engine, edges=[list(e) for e in graph.edges])


@app.post("/decompose", response_model=DecomposeResponse)
def decompose_endpoint(req: DecomposeRequest):
    try:
        pts, sph = _decode_instance(req.points, req.spheres)
        poly = serialize.decode_variety(req.variety) if req.variety else None
        d = decompose(pts, sph, poly, theta_p=req.theta_p, theta_s=req.theta_s)
        verified = None
        violations = []
        if req.verify:
            report = verify_decomposition(d, pts, sph, poly)
            verified = report.ok
            violations = report.violations
    except SphereIncError as exc:
        raise _bad_request(exc) from exc
    return DecomposeResponse(
        residual_edges=[list(e) for e in d.residual_edges],
        blocks=[BlockModel(circle=serialize.encode_circle(b.circle),
                           point_indices=list(b.point_indices),
                           sphere_indices=list(b.sphere_indices))
                for b in d.blocks],
        stats={k: (list(v) if isinstance(v, tuple) else v) for k, v in d.stats.items()},
        verified=verified, violations=violations)


@app.post("/distances", response_model=DistancesResponse)
def distances_endpoint(req: DistancesRequest):
    try:
        pts = serialize.decode_point_set({"points": req.points})
        if req.points2 is not None:
            pts2 = serialize.decode_point_set({"points": req.points2})
            census = distinct_distances_bipartite(pts, pts2)
            unit_count = unit_distances_bipartite(pts, pts2) if req.unit else None
            mode = "bipartite"
        else:
            census = distinct_distances(pts)
            unit_count = unit_distances(pts) if req.unit else None
            mode = "mono"
    except SphereIncError as exc:
        raise _bad_request(exc) from exc
    return DistancesResponse(
        mode=mode, t=census.t,
        histogram={format_rational(k): v for k, v in census.histogram.items()},
        zero_count=census.zero_count, unit_count=unit_count)


@app.post("/generate", response_model=GenerateResponse)
def generate_endpoint(req: GenerateRequest):
    try:
        spec = GeneratorSpec(req.kind, count=req.count, seed=req.seed,
                             params=tuple(req.params.items()))
        result = run_spec(spec)
    except SphereIncError as exc:
        raise _bad_request(exc) from exc
    if isinstance(result, SphereSet):
        return GenerateResponse(
            spheres=[SphereModel(**serialize.encode_sphere(s)) for s in result])
    return GenerateResponse(points=[serialize.encode_point(p) for p in result])


@app.post("/experiment", response_model=ExperimentResponse)
def experiment_endpoint(req: ExperimentRequest):
    try:
        cfg = ExperimentConfig(family=req.family, sizes=req.sizes, engine=req.engine,
                               seed=req.seed, verify=req.verify)
        report = run_experiment(cfg)
    except SphereIncError as exc:
        raise _bad_request(exc) from exc
    return ExperimentResponse(family=report.family, quantity=report.quantity,
                              rows=report.rows, fitted_exponent=report.alpha,
                              fit_residual=report.residual,
                              reference_exponent=report.reference_exponent,
                              footer=report.footer)


@app.get("/healthz")
def healthz():
    return {"status": "ok"}
