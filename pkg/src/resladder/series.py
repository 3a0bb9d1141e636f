"""Explicit series approximations of ladder roots with remainder bounds.

Two equivalent expansions of the root k_n, both with computable remainder
bounds after truncation at order M:

* anchored at the ball center a_n = pi n/(2 ell), in powers of 1/(4 ell):

      k_n ~ a_n + sum_{m=1..M} (-i)^m / (4^m m! ell^m)
                  * d^{m-1}/dk^{m-1} [ (Log F)^m ] (a_n),

  remainder <= max_disk |d^M (Log F)^{M+1}| / (4^{M+1} (M+1)! ell^{M+1}),
  one bound for every n;

* anchored at zero, through G_n(k) = pi n - (i/2) Log F(k):

      k_n ~ sum_{m=1..M} 1 / (2^m m! ell^m) * d^{m-1} [ G_n^m ] (0),

  remainder <= max_disk |d^M G_n^{M+1}| / (2^{M+1} (M+1)! ell^{M+1}),
  which grows with n and is flagged not useful once it exceeds the ball
  radius pi/(4 ell).

Derivatives are taken by Cauchy ring quadrature; the remainder maxima are
sampled on the certified circle |k| = r and inflated by 5%.  For the two
closed-form families the M = 3 truncation of the zero-anchored series
collapses to the three-term formulas at the end of the module.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .characteristic import DiskGeometry, _F_values
from .errors import (
    CotangentPole,
    EvaluationFailed,
    LogArgumentZero,
    OutOfCertifiedRange,
    ZeroStrength,
)
from .ladder import ball_center, ball_radius
from .potentials import BipartiteProblem

__all__ = [
    "SeriesCenter",
    "SeriesApprox",
    "series_at_ball_center",
    "series_at_zero",
    "three_term_step",
    "three_term_delta",
]

# Cauchy rings explore this fraction of the available room around a center
_RING_FRACTION = 0.8
# rings for boundary maxima sit on |k| = r and use this fraction of r
_BOUNDARY_RING_FRACTION = 0.02
# sampled maxima are inflated to absorb between-sample variation
_INFLATION = 0.05


class SeriesCenter(str, enum.Enum):
    BALL_CENTER = "ball_center"
    ZERO = "zero"


@dataclass(frozen=True)
class SeriesApprox:
    """Truncated series value for index n plus its remainder bound."""

    n: int
    order: int
    value: complex
    bound: float
    center: SeriesCenter
    useful: bool


def _ring_log(problem, center, ring, nodes):
    phi = 2.0 * np.pi * np.arange(nodes) / nodes
    vals = _F_values(problem, center + ring * np.exp(1j * phi))
    if not np.all(np.isfinite(vals.real) & np.isfinite(vals.imag)):
        raise EvaluationFailed("characteristic function not finite on series ring")
    if np.any(vals == 0):
        raise LogArgumentZero("characteristic function vanished on series ring")
    return phi, np.log(vals)


@lru_cache(maxsize=16)
def _zero_ring_log(problem, ring, nodes):
    phi, logf = _ring_log(problem, 0.0, ring, nodes)
    phi.flags.writeable = False
    logf.flags.writeable = False
    return phi, logf


@lru_cache(maxsize=16)
def _boundary_log_tensor(problem, radius, boundary_samples, nodes):
    # Log F on small rings around every boundary sample of |k| = r; shared
    # by all remainder bounds of the problem
    ring = _BOUNDARY_RING_FRACTION * radius
    theta = 2.0 * np.pi * np.arange(boundary_samples) / boundary_samples
    phi = 2.0 * np.pi * np.arange(nodes) / nodes
    grid = radius * np.exp(1j * theta)[:, None] + ring * np.exp(1j * phi)[None, :]
    vals = _F_values(problem, grid.ravel()).reshape(grid.shape)
    if not np.all(np.isfinite(vals.real) & np.isfinite(vals.imag)):
        raise EvaluationFailed("characteristic function not finite near |k| = r")
    if np.any(vals == 0):
        raise LogArgumentZero("characteristic function vanished near |k| = r")
    logf = np.log(vals)
    logf.flags.writeable = False
    phi.flags.writeable = False
    return phi, logf, ring


def _boundary_power_max(problem, radius, order, power, boundary_samples, nodes, shift=None):
    # max over boundary samples of |d^order [u^power]| with u = Log F, or
    # u = shift - (i/2) Log F when shift is given
    phi, logf, ring = _boundary_log_tensor(problem, radius, boundary_samples, nodes)
    u = logf if shift is None else shift - 0.5j * logf
    moments = np.mean(np.power(u, power) * np.exp(-1j * order * phi)[None, :], axis=1)
    return float(np.max(np.abs(moments))) * math.factorial(order) / ring**order


def _series_sum(phi, u, ring, order, weight):
    # sum_{m=1..order} weight(m) * (m-1)! ring^{-(m-1)} mean(u^m e^{-i(m-1)phi})
    total = 0.0 + 0.0j
    upow = np.ones_like(u)
    for m in range(1, order + 1):
        upow = upow * u
        moment = np.mean(upow * np.exp(-1j * (m - 1) * phi))
        total += weight(m) * math.factorial(m - 1) * moment / ring ** (m - 1)
    return total


def series_at_ball_center(
    problem: BipartiteProblem,
    geometry: DiskGeometry,
    n: int,
    order: int,
    quadrature_nodes: int = 256,
    boundary_samples: int = 720,
) -> SeriesApprox:
    """Zero-anchored-at-a_n series, with the n-independent remainder bound."""
    if order < 1:
        raise ValueError("series order must be >= 1")
    if abs(n) > geometry.n_max:
        raise OutOfCertifiedRange(
            f"index {n} outside certified range |n| <= {geometry.n_max}"
        )
    ell = problem.ell
    center = ball_center(n, ell)
    ring = _RING_FRACTION * (geometry.radius - abs(center))
    phi, u = _ring_log(problem, center, ring, quadrature_nodes)
    value = center + _series_sum(
        phi, u, ring, order,
        lambda m: (-1j) ** m / (4.0**m * math.factorial(m) * ell**m),
    )
    raw_max = _boundary_power_max(
        problem, geometry.radius, order, order + 1, boundary_samples, quadrature_nodes
    )
    bound = (
        (1.0 + _INFLATION)
        * raw_max
        / (4.0 ** (order + 1) * math.factorial(order + 1) * ell ** (order + 1))
    )
    return SeriesApprox(
        n=n,
        order=order,
        value=complex(value),
        bound=bound,
        center=SeriesCenter.BALL_CENTER,
        useful=bound <= ball_radius(ell),
    )


def series_at_zero(
    problem: BipartiteProblem,
    geometry: DiskGeometry,
    n: int,
    order: int,
    quadrature_nodes: int = 256,
    boundary_samples: int = 720,
) -> SeriesApprox:
    """Zero-anchored series; its remainder bound grows with n.

    Defined for any integer n (the value is just the truncated series); the
    bound is flagged not useful once it exceeds the ball radius.
    """
    if order < 1:
        raise ValueError("series order must be >= 1")
    ell = problem.ell
    ring = _RING_FRACTION * geometry.radius
    phi, logf = _zero_ring_log(problem, ring, quadrature_nodes)
    u = math.pi * n - 0.5j * logf
    value = _series_sum(
        phi, u, ring, order,
        lambda m: 1.0 / (2.0**m * math.factorial(m) * ell**m),
    )
    raw_max = _boundary_power_max(
        problem,
        geometry.radius,
        order,
        order + 1,
        boundary_samples,
        quadrature_nodes,
        shift=math.pi * n,
    )
    bound = (
        (1.0 + _INFLATION)
        * raw_max
        / (2.0 ** (order + 1) * math.factorial(order + 1) * ell ** (order + 1))
    )
    return SeriesApprox(
        n=n,
        order=order,
        value=complex(value),
        bound=bound,
        center=SeriesCenter.ZERO,
        useful=bound <= ball_radius(ell),
    )


def three_term_step(beta_minus, beta_plus, n: int, ell: float) -> complex:
    """Three-term closed asymptotics for two width-1 steps of values -beta^2.

    Equals the order-3 zero-anchored truncation evaluated in closed form.
    Raises ZeroStrength for beta = 0 and CotangentPole when sin beta = 0.
    """
    bm, bp = complex(beta_minus), complex(beta_plus)
    if bm == 0 or bp == 0:
        raise ZeroStrength("three-term step formula needs nonzero beta")
    sm, sp = np.sin(bm), np.sin(bp)
    if abs(sm) < 1e-12 or abs(sp) < 1e-12:
        raise CotangentPole("sin(beta) vanishes; step half is inadmissible")
    cot_sum = np.cos(bp) / (sp * bp) + np.cos(bm) / (sm * bm)
    curvature = 1.0 / (bp * bp * sp * sp) + 1.0 / (bm * bm * sm * sm)
    pn = math.pi * n
    return complex(
        pn / (2.0 * ell)
        + pn * cot_sum / (4.0 * ell**2)
        - (1j * pn * pn * curvature - pn * cot_sum * cot_sum) / (8.0 * ell**3)
    )


def three_term_delta(beta_minus, beta_plus, n: int, ell: float) -> complex:
    """Three-term closed asymptotics for two delta interactions."""
    bm, bp = complex(beta_minus), complex(beta_plus)
    if bm == 0 or bp == 0:
        raise ZeroStrength("three-term delta formula needs nonzero beta")
    s = 1.0 / bp + 1.0 / bm
    q = 1.0 / (bp * bp) + 1.0 / (bm * bm)
    pn = math.pi * n
    return complex(
        pn / (2.0 * ell)
        - pn * s / (4.0 * ell**2)
        - (1j * pn * pn * q - pn * s * s) / (8.0 * ell**3)
    )
