"""Characteristic function F of a bipartite problem and its certified disk.

With boundary data of the Jost solutions X_-, X_+ (see ``jost``), the
characteristic function is the product of a minus and a plus factor,

    F(k) = (X'_-(0,k) - ik X_-(0,k)) / (X'_-(0,k) + ik X_-(0,k))
         * (X'_+(d,k) - ik X_+(d,k)) / (X'_+(d,-k) - ik X_+(d,-k)),

normalized so that F(0) = 1.  Complex wavenumbers k with e^{4ik ell} = F(k)
are exactly the resonances / eigenvalues / spectral singularities of the
bipartite operator.  The ladder machinery downstream needs a disk |k| <= r
on which F stays close to 1; this module estimates the largest such radius,
the derivative bound sup |F'|, the contraction margin and the certified
index range, and provides closed forms for the two exactly solvable
families (single width-1 steps and delta interactions) used as oracles.

F is meromorphic; evaluation raises DenominatorVanishes at its poles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CotangentPole,
    DenominatorVanishes,
    EvaluationFailed,
    NoAdmissibleRadius,
    ZeroStrength,
    ZeroWavenumber,
)
from .jost import Side, _boundary_values, _trig_pair, jost_boundary
from .potentials import BipartiteProblem, Half

__all__ = [
    "CONTRACTION_THRESHOLD",
    "DiskGeometry",
    "ScatteringCoefficients",
    "eval_F",
    "eval_F_step_closed_form",
    "eval_F_delta_closed_form",
    "scattering_coefficients",
    "cauchy_derivative",
    "eval_F_prime",
    "estimate_radius",
    "index_bound",
    "disk_geometry",
]

# closeness-to-one threshold 1 - e^{-pi/2}; the certified disk keeps
# |F - 1| strictly below it
CONTRACTION_THRESHOLD = 1.0 - math.exp(-math.pi / 2.0)

# relative size below which a factor denominator counts as vanished
_DEN_TINY = 1e-14


def eval_F(problem: BipartiteProblem, k) -> complex:
    """Evaluate F at one complex wavenumber with full error checking.

    Raises DenominatorVanishes (naming the factor) when k is at or
    numerically indistinguishable from a pole of F.
    """
    k = complex(k)
    vm, dm = _boundary_values(problem.minus, Side.MINUS, k)
    vp, dp = _boundary_values(problem.plus, Side.PLUS, k)
    vq, dq = _boundary_values(problem.plus, Side.PLUS, -k)
    num_m = dm - 1j * k * vm
    den_m = dm + 1j * k * vm
    num_p = dp - 1j * k * vp
    den_p = dq - 1j * k * vq
    scale_m = abs(dm) + abs(k) * abs(vm)
    scale_p = abs(dq) + abs(k) * abs(vq)
    if abs(den_m) <= _DEN_TINY * scale_m:
        raise DenominatorVanishes(
            f"minus-factor denominator vanishes at k = {k}", factor="minus"
        )
    if abs(den_p) <= _DEN_TINY * scale_p:
        raise DenominatorVanishes(
            f"plus-factor denominator vanishes at k = {k}", factor="plus"
        )
    return complex((num_m / den_m) * (num_p / den_p))


def _F_values(problem: BipartiteProblem, ks) -> np.ndarray:
    # vectorized F; non-finite entries mark failed nodes instead of raising
    ks = np.asarray(ks, dtype=complex)
    vm, dm = _boundary_values(problem.minus, Side.MINUS, ks)
    vp, dp = _boundary_values(problem.plus, Side.PLUS, ks)
    vq, dq = _boundary_values(problem.plus, Side.PLUS, -ks)
    with np.errstate(all="ignore"):
        return ((dm - 1j * ks * vm) / (dm + 1j * ks * vm)) * (
            (dp - 1j * ks * vp) / (dq - 1j * ks * vq)
        )


def _step_factor(beta: complex, k: complex) -> complex:
    # (2ik sqrt(z) cot sqrt(z) + beta^2 + 2k^2) / beta^2 with z = k^2 + beta^2,
    # evaluated branch-free through the entire pair cos sqrt(z), sin sqrt(z)/sqrt(z)
    beta2 = beta * beta
    z = k * k + beta2
    cval, sval = _trig_pair(z, 1.0)
    cval, sval = complex(cval), complex(sval)
    if abs(sval) < 1e-12:
        raise CotangentPole(f"sin(sqrt(k^2 + beta^2)) vanishes at k = {k}")
    return (2j * k * cval / sval + beta2 + 2.0 * k * k) / beta2


def eval_F_step_closed_form(beta_minus, beta_plus, k) -> complex:
    """Closed-form F for two width-1 steps of values -beta^2.

    Independent of the transfer-matrix route: each half contributes the
    factor (2ik kappa cot kappa + beta^2 + 2k^2)/beta^2, kappa^2 = k^2+beta^2.
    Raises ZeroStrength for beta = 0 and CotangentPole at poles of cot.
    """
    bm, bp = complex(beta_minus), complex(beta_plus)
    if bm == 0 or bp == 0:
        raise ZeroStrength("step closed form needs nonzero beta")
    return _step_factor(bm, complex(k)) * _step_factor(bp, complex(k))


def eval_F_delta_closed_form(beta_minus, beta_plus, k) -> complex:
    """Closed-form F for two delta interactions of strengths beta_-+."""
    bm, bp = complex(beta_minus), complex(beta_plus)
    if bm == 0 or bp == 0:
        raise ZeroStrength("delta closed form needs nonzero beta")
    k = complex(k)
    return (2j * k - bp) * (2j * k - bm) / (bm * bp)


@dataclass(frozen=True)
class ScatteringCoefficients:
    """Outgoing/incoming plane-wave amplitudes right of one half's support.

    X(x,k) = a e^{-ikx} + b e^{ikx} for x to the right of the support.
    """

    a: complex
    b: complex
    k: complex
    side: Side


def scattering_coefficients(half: Half, side: Side, k) -> ScatteringCoefficients:
    """Plane-wave amplitudes of the Jost solution past the support.

    Raises ZeroWavenumber at k = 0 where the decomposition degenerates.
    """
    k = complex(k)
    if k == 0:
        raise ZeroWavenumber("scattering coefficients are undefined at k = 0")
    bd = jost_boundary(half, side, k)
    x_edge = bd.point if side is Side.PLUS else 0.0
    up = np.exp(-1j * k * x_edge)
    um = np.exp(1j * k * x_edge)
    a = (1j * k * bd.value - bd.derivative) / (2j * k * up)
    b = (1j * k * bd.value + bd.derivative) / (2j * k * um)
    return ScatteringCoefficients(a=complex(a), b=complex(b), k=k, side=side)


def cauchy_derivative(f, center, order, ring_radius, nodes: int = 256) -> complex:
    """order-th derivative of a holomorphic f at center via a circle integral.

    Trapezoid on equispaced ring nodes, which is spectrally accurate for
    holomorphic integrands:

        f^(m)(c) = m! / ring^m * mean_j f(c + ring e^{i th_j}) e^{-i m th_j}.

    f may be vectorized (ndarray -> ndarray) or scalar; non-finite values or
    evaluation errors raise EvaluationFailed.
    """
    if nodes < 16:
        raise ValueError("cauchy_derivative needs at least 16 nodes")
    if not ring_radius > 0.0:
        raise ValueError("ring_radius must be positive")
    center = complex(center)
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    ring = center + ring_radius * np.exp(1j * theta)
    vals = None
    try:
        out = np.asarray(f(ring), dtype=complex)
        if out.shape == ring.shape:
            vals = out
    except Exception:
        vals = None
    if vals is None:
        try:
            vals = np.array([complex(f(z)) for z in ring], dtype=complex)
        except Exception as exc:
            raise EvaluationFailed(f"integrand failed on quadrature ring: {exc}") from exc
    if not np.all(np.isfinite(vals.real) & np.isfinite(vals.imag)):
        raise EvaluationFailed("integrand non-finite on quadrature ring")
    moment = np.mean(vals * np.exp(-1j * order * theta))
    return complex(math.factorial(order) * moment / ring_radius**order)


def eval_F_prime(problem: BipartiteProblem, k, ring_radius=None, nodes: int = 256) -> complex:
    """F'(k) by Cauchy quadrature (never finite differences).

    Default ring radius pi/(8 ell), half a ladder ball radius, small enough
    to stay inside the holomorphy region near any certified point.
    """
    if ring_radius is None:
        ring_radius = math.pi / (8.0 * problem.ell)
    return cauchy_derivative(
        lambda z: _F_values(problem, z), complex(k), 1, ring_radius, nodes
    )


def _boundary_max_F_minus_1(problem, r, boundary_samples):
    theta = np.exp(2j * np.pi * np.arange(boundary_samples) / boundary_samples)
    vals = np.abs(_F_values(problem, r * theta) - 1.0)
    if not np.all(np.isfinite(vals)):
        return math.inf
    return float(np.max(vals))


def estimate_radius(
    problem: BipartiteProblem,
    r_hi: float = 1.0,
    boundary_samples: int = 720,
    safety: float = 0.02,
) -> float:
    """Largest radius r <= r_hi with |F - 1| below the contraction threshold.

    The predicate max_{|k|=r} |F(k)-1| < (1 - e^{-pi/2}) (1 - safety) is
    sampled at ``boundary_samples`` points; the boundary max equals the disk
    max and is nondecreasing in r (maximum modulus), so bisection applies.
    Raises NoAdmissibleRadius when no radius passes (e.g. F has a pole at 0).
    """
    if not r_hi > 0.0:
        raise ValueError("r_hi must be positive")
    threshold = CONTRACTION_THRESHOLD * (1.0 - safety)

    def passes(r):
        return _boundary_max_F_minus_1(problem, r, boundary_samples) < threshold

    if passes(r_hi):
        return r_hi
    lo = 0.0
    r = r_hi
    for _ in range(60):
        r *= 0.5
        if passes(r):
            lo = r
            break
    if lo == 0.0:
        raise NoAdmissibleRadius(
            "no radius satisfies the closeness-to-one predicate; "
            "the problem is likely inadmissible"
        )
    hi = r_hi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if passes(mid):
            lo = mid
        else:
            hi = mid
    return lo


def index_bound(radius: float, ell: float) -> int:
    """Largest certified ladder index: floor(2 ell r / pi - 1/2).

    Negative (-1) when not even the n = 0 ball fits in the disk.
    """
    return math.floor(2.0 * ell * radius / math.pi - 0.5)


@dataclass(frozen=True)
class DiskGeometry:
    """Certified disk data: radius, derivative bound, margin, index range.

    contraction_margin = e^{pi/2} sup|F'| / (4 ell) must be < 1 for the
    fixed-point ladder solves to be certified.  n_max < 0 means the
    certified index range is empty.
    """

    radius: float
    sup_F_prime: float
    contraction_margin: float
    n_max: int


def disk_geometry(
    problem: BipartiteProblem,
    r_hi: float = 1.0,
    boundary_samples: int = 720,
    quadrature_nodes: int = 256,
    safety: float = 0.02,
    inflation: float = 0.05,
) -> DiskGeometry:
    """Estimate the certified disk and its contraction data.

    sup |F'| over the closed disk is attained on the boundary circle
    (maximum modulus); it is sampled there through per-point Cauchy rings of
    radius 0.05 r and inflated by ``inflation`` to absorb sampling gaps.
    """
    r = estimate_radius(problem, r_hi, boundary_samples, safety)
    theta = 2.0 * np.pi * np.arange(boundary_samples) / boundary_samples
    centers = r * np.exp(1j * theta)
    ring = 0.05 * r
    phi = 2.0 * np.pi * np.arange(quadrature_nodes) / quadrature_nodes
    grid = centers[:, None] + ring * np.exp(1j * phi)[None, :]
    vals = _F_values(problem, grid.ravel()).reshape(grid.shape)
    if not np.all(np.isfinite(vals.real) & np.isfinite(vals.imag)):
        raise EvaluationFailed("characteristic function not finite near |k| = r")
    deriv = np.mean(vals * np.exp(-1j * phi)[None, :], axis=1) / ring
    sup = (1.0 + inflation) * float(np.max(np.abs(deriv)))
    margin = math.exp(math.pi / 2.0) * sup / (4.0 * problem.ell)
    return DiskGeometry(
        radius=r,
        sup_F_prime=sup,
        contraction_margin=margin,
        n_max=index_bound(r, problem.ell),
    )
