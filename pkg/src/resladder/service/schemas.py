"""Request and response models of the ladder service.

Complex numbers travel as two-element arrays [re, im] throughout.  The
potential descriptors mirror the library variants plus the "step" shorthand
for a single constant piece of value -beta^2 on [0, width].
"""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, Field

from ..potentials import Delta, Half, PiecewiseConstant, step_half

ComplexPair = tuple[float, float]


def _c(pair: ComplexPair) -> complex:
    return complex(pair[0], pair[1])


def _pair(z: complex) -> ComplexPair:
    return (z.real, z.imag)


class DeltaSpec(BaseModel):
    kind: Literal["delta"]
    beta: ComplexPair

    def to_half(self) -> Half:
        return Delta(beta=_c(self.beta))


class StepSpec(BaseModel):
    kind: Literal["step"]
    beta: ComplexPair
    width: float = 1.0

    def to_half(self) -> Half:
        return step_half(_c(self.beta), self.width)


class PiecewiseSpec(BaseModel):
    kind: Literal["piecewise"]
    breaks: list[float]
    values: list[ComplexPair]

    def to_half(self) -> Half:
        return PiecewiseConstant(
            breaks=tuple(float(x) for x in self.breaks),
            values=tuple(_c(v) for v in self.values),
        )


PotentialSpec = Union[DeltaSpec, StepSpec, PiecewiseSpec]


class RunConfig(BaseModel):
    """One solver run: the problem plus every numerical knob."""

    potential_minus: PotentialSpec = Field(discriminator="kind")
    potential_plus: PotentialSpec = Field(discriminator="kind")
    ell: float
    n_range: Union[Literal["auto"], tuple[int, int]] = "auto"
    tol: float = 1e-15
    max_iter: int = 200
    imag_tol: float = 1e-12
    zero_tol: float = 1e-12
    r_hi: float = 1.0
    boundary_samples: int = 720
    quadrature_nodes: int = 256
    series_order: int = 3


class ScanRequest(RunConfig):
    """Rectangle and grid resolution for a complex-plane scan."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    n_re: int = Field(ge=0)
    n_im: int = Field(ge=0)


class GeometryOut(BaseModel):
    radius: float
    sup_F_prime: float
    contraction_margin: float
    n_max: int
    threshold: float


class AdmissibilityOut(BaseModel):
    admissible: bool
    minus_ok: bool
    plus_ok: bool
    minus_derivative: ComplexPair
    plus_derivative: ComplexPair
    threshold: float


class EntryOut(BaseModel):
    n: int
    a_n: float
    k_re: float
    k_im: float
    lambda_re: float
    lambda_im: float
    iterations: int
    last_step: float
    residual: float
    classification: str
    apriori_bound: float
    certified: bool


class FailureOut(BaseModel):
    n: int
    error_type: str
    error: str


class SolveResponse(BaseModel):
    geometry: GeometryOut
    entries: list[EntryOut]
    failures: list[FailureOut]


class RadiusResponse(BaseModel):
    geometry: GeometryOut
    admissibility: AdmissibilityOut


class ScanRow(BaseModel):
    k_re: float
    k_im: float
    F_re: float | None
    F_im: float | None
    abs_F_minus_1: float | None
    abs_F_prime: float | None


class ScanResponse(BaseModel):
    rows: list[ScanRow]


class ReportOut(BaseModel):
    n: int
    winding: int | None
    newton_re: float | None
    newton_im: float | None
    newton_iterations: int | None
    distance_to_ladder: float | None
    agrees: bool
    error: str | None


class VerifyResponse(BaseModel):
    geometry: GeometryOut
    reports: list[ReportOut]
    failures: list[FailureOut]
    all_agree: bool


class SeriesRowOut(BaseModel):
    n: int
    center: str
    order: int
    value_re: float
    value_im: float
    bound: float
    useful: bool


class SeriesResponse(BaseModel):
    geometry: GeometryOut
    rows: list[SeriesRowOut]
    failures: list[FailureOut]
