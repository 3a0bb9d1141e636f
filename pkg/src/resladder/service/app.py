"""FastAPI service exposing the ladder solver.

Endpoints (all POST, JSON body = RunConfig unless noted):

* /radius  -> certified-disk geometry and the admissibility report
* /solve   -> ladder entries over the requested index range
* /scan    -> F and |F'| over a rectangular grid (ScanRequest body)
* /verify  -> argument-principle cross-validation of the solved ladder
* /series  -> truncated-series values and remainder bounds per index

Library errors map to HTTP 400 with the error message in "detail"; body
shape violations are FastAPI's usual 422.  Per-entry failures inside an
otherwise successful run are returned in the "failures" list, not as HTTP
errors.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..characteristic import (
    CONTRACTION_THRESHOLD,
    DiskGeometry,
    _F_values,
    disk_geometry,
)
from ..errors import ConfigError, NoAdmissibleRadius, ResladderError
from ..jost import check_admissibility
from ..ladder import solve_ladder
from ..oracle import cross_validate
from ..potentials import BipartiteProblem, make_problem
from ..series import series_at_ball_center, series_at_zero
from .schemas import (
    AdmissibilityOut,
    EntryOut,
    FailureOut,
    GeometryOut,
    RadiusResponse,
    ReportOut,
    RunConfig,
    ScanRequest,
    ScanResponse,
    ScanRow,
    SeriesResponse,
    SeriesRowOut,
    SolveResponse,
    VerifyResponse,
)

SERVICE_NAME = "resladder"


def _version() -> str:
    try:
        from importlib.metadata import version

        return version("resladder")
    except Exception:
        return "0+unknown"


def _build_problem(cfg: RunConfig) -> BipartiteProblem:
    return make_problem(
        cfg.potential_minus.to_half(), cfg.potential_plus.to_half(), cfg.ell
    )


def _certified_geometry(problem: BipartiteProblem, cfg: RunConfig) -> DiskGeometry:
    report = check_admissibility(problem)
    if not report.admissible:
        bad = []
        if not report.minus_ok:
            bad.append("minus")
        if not report.plus_ok:
            bad.append("plus")
        raise NoAdmissibleRadius(
            "inadmissible problem: "
            + " and ".join(f"{side}-half Jost derivative vanishes at k = 0" for side in bad)
        )
    return disk_geometry(
        problem,
        r_hi=cfg.r_hi,
        boundary_samples=cfg.boundary_samples,
        quadrature_nodes=cfg.quadrature_nodes,
    )


def _geometry_out(geometry: DiskGeometry) -> GeometryOut:
    return GeometryOut(
        radius=geometry.radius,
        sup_F_prime=geometry.sup_F_prime,
        contraction_margin=geometry.contraction_margin,
        n_max=geometry.n_max,
        threshold=CONTRACTION_THRESHOLD,
    )


def _resolve_range(cfg: RunConfig, geometry: DiskGeometry) -> tuple[int, int]:
    if cfg.n_range == "auto":
        if geometry.n_max < 0:
            return 0, -1
        return -geometry.n_max, geometry.n_max
    lo, hi = int(cfg.n_range[0]), int(cfg.n_range[1])
    if lo > hi:
        raise ConfigError("n_range lower bound exceeds upper bound")
    return lo, hi


def _entry_out(entry) -> EntryOut:
    lam = entry.k * entry.k
    return EntryOut(
        n=entry.n,
        a_n=entry.center,
        k_re=entry.k.real,
        k_im=entry.k.imag,
        lambda_re=lam.real,
        lambda_im=lam.imag,
        iterations=entry.iterations,
        last_step=entry.last_step,
        residual=entry.residual,
        classification=entry.classification.value,
        apriori_bound=entry.apriori_bound,
        certified=entry.certified,
    )


def _failures_out(failures) -> list[FailureOut]:
    return [
        FailureOut(n=n, error_type=type(exc).__name__, error=str(exc))
        for n, exc in failures
    ]


def _solve(cfg: RunConfig):
    problem = _build_problem(cfg)
    geometry = _certified_geometry(problem, cfg)
    n_lo, n_hi = _resolve_range(cfg, geometry)
    entries, failures = solve_ladder(
        problem,
        geometry,
        n_lo,
        n_hi,
        tol=cfg.tol,
        max_iter=cfg.max_iter,
        imag_tol=cfg.imag_tol,
        zero_tol=cfg.zero_tol,
    )
    return problem, geometry, entries, failures


def create_app() -> FastAPI:
    app = FastAPI(title=SERVICE_NAME, version=_version())

    @app.exception_handler(ResladderError)
    async def _library_error(_request: Request, exc: ResladderError):
        return JSONResponse(
            status_code=400,
            content={"detail": str(exc), "error_type": type(exc).__name__},
        )

    @app.get("/")
    def info():
        return {
            "service": SERVICE_NAME,
            "version": _version(),
            "endpoints": ["/radius", "/solve", "/scan", "/verify", "/series"],
        }

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/radius", response_model=RadiusResponse)
    def radius(cfg: RunConfig) -> RadiusResponse:
        problem = _build_problem(cfg)
        report = check_admissibility(problem)
        geometry = _certified_geometry(problem, cfg)
        return RadiusResponse(
            geometry=_geometry_out(geometry),
            admissibility=AdmissibilityOut(
                admissible=report.admissible,
                minus_ok=report.minus_ok,
                plus_ok=report.plus_ok,
                minus_derivative=(
                    report.minus_derivative.real,
                    report.minus_derivative.imag,
                ),
                plus_derivative=(
                    report.plus_derivative.real,
                    report.plus_derivative.imag,
                ),
                threshold=report.threshold,
            ),
        )

    @app.post("/solve", response_model=SolveResponse)
    def solve(cfg: RunConfig) -> SolveResponse:
        _problem, geometry, entries, failures = _solve(cfg)
        return SolveResponse(
            geometry=_geometry_out(geometry),
            entries=[_entry_out(e) for e in entries],
            failures=_failures_out(failures),
        )

    @app.post("/scan", response_model=ScanResponse)
    def scan(cfg: ScanRequest) -> ScanResponse:
        problem = _build_problem(cfg)
        res = np.linspace(cfg.re_min, cfg.re_max, cfg.n_re)
        ims = np.linspace(cfg.im_min, cfg.im_max, cfg.n_im)
        rows: list[ScanRow] = []
        if res.size and ims.size:
            grid = res[None, :] + 1j * ims[:, None]
            fvals = _F_values(problem, grid)
            # |F'| per node by a small Cauchy ring scaled to the node
            ring = 1e-3 * np.maximum(1.0, np.abs(grid))
            phi = 2.0 * np.pi * np.arange(64) / 64
            ringvals = _F_values(
                problem, grid[..., None] + ring[..., None] * np.exp(1j * phi)
            )
            with np.errstate(all="ignore"):
                deriv = np.mean(ringvals * np.exp(-1j * phi), axis=-1) / ring
            f_ok = np.isfinite(fvals.real) & np.isfinite(fvals.imag)
            d_ok = np.all(
                np.isfinite(ringvals.real) & np.isfinite(ringvals.imag), axis=-1
            )
            for i in range(ims.size):
                for j in range(res.size):
                    rows.append(
                        ScanRow(
                            k_re=float(res[j]),
                            k_im=float(ims[i]),
                            F_re=float(fvals[i, j].real) if f_ok[i, j] else None,
                            F_im=float(fvals[i, j].imag) if f_ok[i, j] else None,
                            abs_F_minus_1=(
                                float(abs(fvals[i, j] - 1.0)) if f_ok[i, j] else None
                            ),
                            abs_F_prime=(
                                float(abs(deriv[i, j])) if d_ok[i, j] else None
                            ),
                        )
                    )
        return ScanResponse(rows=rows)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(cfg: RunConfig) -> VerifyResponse:
        problem, geometry, entries, failures = _solve(cfg)
        reports = cross_validate(problem, geometry, entries)
        return VerifyResponse(
            geometry=_geometry_out(geometry),
            reports=[
                ReportOut(
                    n=r.n,
                    winding=r.winding,
                    newton_re=None if r.newton_root is None else r.newton_root.real,
                    newton_im=None if r.newton_root is None else r.newton_root.imag,
                    newton_iterations=r.newton_iterations,
                    distance_to_ladder=r.distance_to_ladder,
                    agrees=r.agrees,
                    error=r.error,
                )
                for r in reports
            ],
            failures=_failures_out(failures),
            all_agree=bool(all(r.agrees for r in reports) and not failures),
        )

    @app.post("/series", response_model=SeriesResponse)
    def series(cfg: RunConfig) -> SeriesResponse:
        problem = _build_problem(cfg)
        geometry = _certified_geometry(problem, cfg)
        n_lo, n_hi = _resolve_range(cfg, geometry)
        rows: list[SeriesRowOut] = []
        failures: list = []
        for n in range(n_lo, n_hi + 1):
            for fn in (series_at_ball_center, series_at_zero):
                try:
                    approx = fn(
                        problem,
                        geometry,
                        n,
                        cfg.series_order,
                        quadrature_nodes=cfg.quadrature_nodes,
                        boundary_samples=cfg.boundary_samples,
                    )
                except ResladderError as exc:
                    failures.append((n, exc))
                    continue
                rows.append(
                    SeriesRowOut(
                        n=approx.n,
                        center=approx.center.value,
                        order=approx.order,
                        value_re=approx.value.real,
                        value_im=approx.value.imag,
                        bound=approx.bound,
                        useful=approx.useful,
                    )
                )
        return SeriesResponse(
            geometry=_geometry_out(geometry),
            rows=rows,
            failures=_failures_out(failures),
        )

    return app


app = create_app()
