"""Independent verification of ladder roots by the argument principle.

Roots of the characteristic equation are zeros of g(k) = e^{4ik ell} - F(k).
This module counts them by discrete phase tracking of g around circles
(winding numbers, zeros minus poles inside for meromorphic g; F is
holomorphic on the certified disk, so poles do not interfere there) and
polishes candidates by Newton steps with g' assembled from the Cauchy
derivative of F.  None of it reuses the fixed-point solver, so agreement is
a genuine cross-check: winding 1 around a ladder ball certifies existence
and uniqueness, the Newton root certifies the value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characteristic import DiskGeometry, _F_values, eval_F, eval_F_prime
from .errors import (
    DerivativeVanished,
    EvaluationFailed,
    NotConverged,
    PhaseTrackingUnresolved,
    ResladderError,
    ZeroOnContour,
)
from .ladder import LadderEntry, ball_radius
from .potentials import BipartiteProblem

__all__ = [
    "ValidationReport",
    "char_g",
    "char_g_prime",
    "winding_number",
    "newton_refine",
    "cross_validate",
]

# phase increments between contour nodes must stay below this
_MAX_PHASE_JUMP = math.pi / 2.0
# |g| below 1e-12 of its local additive scale counts as a zero on contour
_CONTOUR_ZERO_REL = 1e-12


def char_g(problem: BipartiteProblem, k) -> complex:
    """g(k) = e^{4ik ell} - F(k), zero exactly at characteristic roots."""
    k = complex(k)
    with np.errstate(all="ignore"):
        expv = complex(np.exp(4j * k * problem.ell))
    return expv - eval_F(problem, k)


def char_g_prime(problem: BipartiteProblem, k, ring_radius=None, nodes: int = 256) -> complex:
    """g'(k) = 4i ell e^{4ik ell} - F'(k), with F' by Cauchy quadrature."""
    k = complex(k)
    with np.errstate(all="ignore"):
        expv = complex(np.exp(4j * k * problem.ell))
    return 4j * problem.ell * expv - eval_F_prime(problem, k, ring_radius, nodes)


def _g_parts(problem, ks):
    ks = np.asarray(ks, dtype=complex)
    with np.errstate(all="ignore"):
        expv = np.exp(4j * ks * problem.ell)
    return expv, _F_values(problem, ks)


def winding_number(
    problem: BipartiteProblem,
    center,
    radius: float,
    nodes: int = 4096,
    max_doublings: int = 6,
) -> int:
    """Winding number of g around a circle by discrete phase tracking.

    Node count doubles until every phase increment is below pi/2; the
    accumulated phase must land within 0.1 turns of an integer.  Raises
    ZeroOnContour when |g| at a node falls below 1e-12 of its additive
    scale |e^{4ik ell}| + |F| there, and PhaseTrackingUnresolved when the
    doubling budget runs out.
    """
    center = complex(center)
    if not radius > 0.0:
        raise ValueError("contour radius must be positive")
    count = nodes
    for _ in range(max_doublings + 1):
        theta = 2.0 * np.pi * np.arange(count) / count
        ring = center + radius * np.exp(1j * theta)
        expv, fv = _g_parts(problem, ring)
        g = expv - fv
        if not np.all(np.isfinite(g.real) & np.isfinite(g.imag)):
            raise EvaluationFailed("characteristic g not finite on contour")
        scale = np.abs(expv) + np.abs(fv)
        if np.any(np.abs(g) <= _CONTOUR_ZERO_REL * np.maximum(scale, 1.0)):
            raise ZeroOnContour(
                f"root on or too near the contour |k - {center}| = {radius}"
            )
        ang = np.angle(g)
        jumps = np.diff(np.concatenate([ang, ang[:1]]))
        jumps = (jumps + np.pi) % (2.0 * np.pi) - np.pi
        if float(np.max(np.abs(jumps))) < _MAX_PHASE_JUMP:
            turns = float(np.sum(jumps)) / (2.0 * np.pi)
            nearest = round(turns)
            if abs(turns - nearest) < 0.1:
                return int(nearest)
            raise PhaseTrackingUnresolved(
                f"accumulated phase {turns:.6f} turns is not near an integer"
            )
        count *= 2
    raise PhaseTrackingUnresolved(
        f"phase jumps exceed pi/2 even with {count // 2} contour nodes"
    )


def newton_refine(
    problem: BipartiteProblem,
    k0,
    tol: float = 1e-12,
    max_iter: int = 50,
):
    """Polish a root candidate of g by Newton steps until |g| < tol.

    Returns (root, iterations).  Raises DerivativeVanished when |g'| falls
    below 1e-12 (1 + 4 ell) and NotConverged when the budget runs out.
    """
    k = complex(k0)
    floor = 1e-12 * (1.0 + 4.0 * problem.ell)
    for used in range(max_iter + 1):
        g = char_g(problem, k)
        if abs(g) < tol:
            return k, used
        if used == max_iter:
            break
        gp = char_g_prime(problem, k)
        if abs(gp) <= floor:
            raise DerivativeVanished(f"|g'({k})| = {abs(gp):.3e} too small for Newton")
        k = k - g / gp
    raise NotConverged(
        f"newton refinement still above tol after {max_iter} steps",
        last_iterate=k,
    )


@dataclass(frozen=True)
class ValidationReport:
    """Cross-check of one ladder entry against the argument principle."""

    n: int
    winding: int | None
    newton_root: complex | None
    newton_iterations: int | None
    distance_to_ladder: float | None
    agrees: bool
    error: str | None = None


def cross_validate(
    problem: BipartiteProblem,
    geometry: DiskGeometry,
    entries: list[LadderEntry],
    tol: float = 1e-12,
    nodes: int = 4096,
) -> list[ValidationReport]:
    """Verify each entry: winding 1 around its ball, Newton root within tol.

    The Newton polish starts from the ball center, not from the solver's
    value, so both checks are independent of the fixed-point route.
    Per-entry errors are captured in the report instead of aborting.
    """
    radius = ball_radius(problem.ell)
    reports = []
    for entry in entries:
        try:
            winding = winding_number(problem, entry.center, radius, nodes)
            root, used = newton_refine(problem, entry.center, tol=tol)
            distance = abs(root - entry.k)
            reports.append(
                ValidationReport(
                    n=entry.n,
                    winding=winding,
                    newton_root=root,
                    newton_iterations=used,
                    distance_to_ladder=distance,
                    agrees=(winding == 1 and distance <= tol),
                )
            )
        except ResladderError as exc:
            reports.append(
                ValidationReport(
                    n=entry.n,
                    winding=None,
                    newton_root=None,
                    newton_iterations=None,
                    distance_to_ladder=None,
                    agrees=False,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return reports
