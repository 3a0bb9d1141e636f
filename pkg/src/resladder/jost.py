"""Jost solutions of -psi'' + V psi = k^2 psi for one half-potential.

The Jost solution X(x, k) equals the outgoing plane wave e^{-ikx} to the left
of the support.  This module transports the Cauchy data (X, X') across the
support and returns the boundary data the characteristic function needs: at
the inner edge x = 0 for the minus half and at the outer edge x = d for the
plus half (global coordinates; the minus support is [-d, 0]).

Transport over a constant piece of value v uses the entire functions

    C(mu, h) = cos(sqrt(mu) h),   S(mu, h) = sin(sqrt(mu) h) / sqrt(mu),

of mu = k^2 - v, which are branch-free: both are even in sqrt(mu), so the
square-root branch never matters, and a Taylor switch keeps them accurate
through mu = 0.  A delta piece beta*delta only jumps the derivative by
beta * X (right-limit convention).

All propagation code accepts scalar or ndarray wavenumbers; the public
functions return python complex for scalar input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidHalf
from .potentials import (
    BipartiteProblem,
    Delta,
    Half,
    PiecewiseConstant,
    support_width,
    validate_half,
)

__all__ = [
    "Side",
    "BoundaryData",
    "AdmissibilityReport",
    "propagate_constant",
    "apply_delta_jump",
    "jost_boundary",
    "check_admissibility",
]

# below this |mu| h^2 the trig pair switches to degree-3 Taylor polynomials
_SERIES_CUTOFF = 1e-6


class Side(enum.Enum):
    MINUS = "minus"
    PLUS = "plus"


@dataclass(frozen=True)
class BoundaryData:
    """Jost value and derivative at the evaluation edge of one half.

    ``point`` is the evaluation abscissa in local coordinates where the
    support is [0, d]; it equals d for both sides (the minus half is
    evaluated at global x = 0, which is its right support edge).
    """

    value: complex
    derivative: complex
    k: complex
    point: float


def _trig_pair(mu, h):
    # C = cos(sqrt(mu) h), S = sin(sqrt(mu) h)/sqrt(mu), entire in mu
    z = np.asarray(mu, dtype=complex) * (h * h)
    small = np.abs(z) < _SERIES_CUTOFF
    zsafe = np.where(small, 1.0, z)
    w = np.sqrt(zsafe)
    c_series = 1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0
    s_series = 1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0
    cval = np.where(small, c_series, np.cos(w))
    sval = h * np.where(small, s_series, np.sin(w) / w)
    return cval, sval


def _step(v, h, value, deriv, k):
    mu = np.asarray(k, dtype=complex) ** 2 - complex(v)
    cval, sval = _trig_pair(mu, h)
    return cval * value + sval * deriv, -mu * sval * value + cval * deriv


def propagate_constant(v, h, state, k):
    """Transport Cauchy data (value, derivative) across a constant piece.

    Parameters
    ----------
    v : complex
        Constant potential value on the piece.
    h : float
        Piece length, h > 0.
    state : (complex, complex)
        (X, X') at the left edge of the piece.
    k : complex or ndarray
        Wavenumber(s).

    Returns
    -------
    (value, derivative) at the right edge.  The transport matrix has unit
    determinant, so propagation is exactly invertible in exact arithmetic.
    """
    value, deriv = state
    new_value, new_deriv = _step(v, h, value, deriv, k)
    if np.ndim(k) == 0 and np.ndim(value) == 0:
        return complex(new_value), complex(new_deriv)
    return new_value, new_deriv


def apply_delta_jump(beta, state):
    """Jump condition of beta*delta: X continuous, X' gains beta X."""
    value, deriv = state
    return value, deriv + complex(beta) * value


def _boundary_values(half: Half, side: Side, k):
    # plane-wave data e^{-ikx} at the left support edge, transported across
    d = support_width(half)
    x_left = -d if side is Side.MINUS else 0.0
    kc = np.asarray(k, dtype=complex)
    value = np.exp(-1j * kc * x_left)
    deriv = -1j * kc * value
    if isinstance(half, Delta):
        return apply_delta_jump(half.beta, (value, deriv))
    for j, v in enumerate(half.values):
        h = half.breaks[j + 1] - half.breaks[j]
        value, deriv = _step(v, h, value, deriv, k)
    return value, deriv


def jost_boundary(half: Half, side: Side, k) -> BoundaryData:
    """Boundary data of the Jost solution for one half-potential.

    For side MINUS the data is (X(0,k), X'(0,k)); for side PLUS it is
    (X(d,k), X'(d,k)) with d the support width.  Validates the half first
    and propagates its validation errors.
    """
    if not isinstance(side, Side):
        raise InvalidHalf(f"side must be a Side, got {side!r}")
    validate_half(half, side.value)
    value, deriv = _boundary_values(half, side, k)
    if np.ndim(k) == 0:
        return BoundaryData(
            value=complex(value),
            derivative=complex(deriv),
            k=complex(k),
            point=support_width(half),
        )
    return BoundaryData(value=value, derivative=deriv, k=k, point=support_width(half))


@dataclass(frozen=True)
class AdmissibilityReport:
    """Nonvanishing check of the Jost derivatives at k = 0.

    The ladder theory needs X'_-(0, 0) != 0 and X'_+(d_+, 0) != 0.  For
    single-piece halves the report also carries sin(sqrt(-v) d) (zero exactly
    when the derivative must vanish); for delta halves the derivative equals
    the strength itself.  The sine fields are None when not applicable.
    """

    admissible: bool
    minus_ok: bool
    plus_ok: bool
    minus_derivative: complex
    plus_derivative: complex
    threshold: float
    minus_edge_sine: complex | None = None
    plus_edge_sine: complex | None = None


def _edge_sine(half: Half) -> complex | None:
    if isinstance(half, PiecewiseConstant) and len(half.values) == 1:
        d = half.breaks[-1]
        kappa = np.sqrt(complex(-half.values[0]))
        return complex(np.sin(kappa * d))
    return None


def check_admissibility(problem: BipartiteProblem, threshold: float = 1e-12) -> AdmissibilityReport:
    """Check both k = 0 Jost derivatives against an absolute threshold."""
    dm = jost_boundary(problem.minus, Side.MINUS, 0.0).derivative
    dp = jost_boundary(problem.plus, Side.PLUS, 0.0).derivative
    minus_ok = abs(dm) > threshold
    plus_ok = abs(dp) > threshold
    return AdmissibilityReport(
        admissible=minus_ok and plus_ok,
        minus_ok=minus_ok,
        plus_ok=plus_ok,
        minus_derivative=dm,
        plus_derivative=dp,
        threshold=threshold,
        minus_edge_sine=_edge_sine(problem.minus),
        plus_edge_sine=_edge_sine(problem.plus),
    )
