"""Fixed-point solver for the equidistant ladder of characteristic roots.

Roots of e^{4ik ell} = F(k) inside the certified disk live in disjoint balls
B_n of radius pi/(4 ell) around the centers a_n = pi n / (2 ell), one root
per ball, for |n| up to the certified index bound.  Writing k = a_n + z the
root is the unique fixed point of

    z  ->  -i/(4 ell) * Log F(a_n + z)      (principal branch),

a contraction with ratio q = e^{pi/2} sup|F'| / (4 ell) whenever q < 1.
Iterating from z = 0 converges geometrically; after m applications the
distance to the root is at most pi e^{m pi/2} (4 ell)^{-(m+1)} sup|F'|^m.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .characteristic import DiskGeometry, eval_F
from .errors import (
    LogArgumentZero,
    NotConverged,
    OutOfCertifiedRange,
    ResladderError,
)
from .potentials import BipartiteProblem

__all__ = [
    "Classification",
    "LadderEntry",
    "ball_center",
    "ball_radius",
    "classify",
    "apriori_error_bound",
    "residual",
    "solve_entry",
    "solve_ladder",
]


class Classification(str, enum.Enum):
    EIGENVALUE = "eigenvalue"
    RESONANCE = "resonance"
    SPECTRAL_SINGULARITY = "spectral_singularity"
    NEAR_ZERO = "near_zero"


def ball_center(n: int, ell: float) -> float:
    """Ladder anchor a_n = pi n / (2 ell)."""
    return math.pi * n / (2.0 * ell)


def ball_radius(ell: float) -> float:
    """Common localization radius pi / (4 ell) of the ladder balls."""
    return math.pi / (4.0 * ell)


def classify(k, imag_tol: float = 1e-12, zero_tol: float = 1e-12) -> Classification:
    """Spectral role of a characteristic root by its position.

    Im k above/below +-imag_tol marks an eigenvalue/resonance; otherwise the
    root is a spectral-singularity candidate unless |k| <= zero_tol, which is
    the inconclusive near-zero case.
    """
    k = complex(k)
    if k.imag > imag_tol:
        return Classification.EIGENVALUE
    if k.imag < -imag_tol:
        return Classification.RESONANCE
    if abs(k) <= zero_tol:
        return Classification.NEAR_ZERO
    return Classification.SPECTRAL_SINGULARITY


def apriori_error_bound(m: int, ell: float, sup_F_prime: float) -> float:
    """Distance bound after m map applications, independent of the iterates.

    pi e^{m pi/2} (4 ell)^{-(m+1)} sup|F'|^m; returns 0 for sup|F'| = 0 and
    inf on overflow (meaningful only while the contraction margin is < 1).
    """
    if m < 1:
        raise ValueError("bound defined for m >= 1 applications")
    if sup_F_prime == 0.0:
        return 0.0
    log_bound = (
        math.log(math.pi)
        + m * math.pi / 2.0
        - (m + 1) * math.log(4.0 * ell)
        + m * math.log(sup_F_prime)
    )
    try:
        return math.exp(log_bound)
    except OverflowError:
        return math.inf


def residual(problem: BipartiteProblem, k) -> float:
    """|e^{4ik ell} - F(k)|, the defect of the characteristic equation."""
    k = complex(k)
    with np.errstate(all="ignore"):
        expv = np.exp(4j * k * problem.ell)
    return float(abs(complex(expv) - eval_F(problem, k)))


@dataclass(frozen=True)
class LadderEntry:
    """One converged ladder root and its certificates."""

    n: int
    center: float
    k: complex
    iterations: int
    last_step: float
    residual: float
    classification: Classification
    apriori_bound: float
    certified: bool
    iterates: tuple | None = None


def solve_entry(
    problem: BipartiteProblem,
    geometry: DiskGeometry,
    n: int,
    tol: float = 1e-15,
    max_iter: int = 200,
    imag_tol: float = 1e-12,
    zero_tol: float = 1e-12,
    best_effort: bool = False,
    keep_iterates: bool = False,
) -> LadderEntry:
    """Solve for the ladder root of index n by fixed-point iteration.

    Guaranteed mode requires contraction margin < 1 and |n| <= n_max and
    produces a certified entry; best_effort=True runs the same iteration
    outside those guarantees and marks the entry uncertified.  Convergence
    is declared when the successive step drops below tol.
    """
    certified = geometry.contraction_margin < 1.0 and abs(n) <= geometry.n_max
    if not certified and not best_effort:
        if abs(n) > geometry.n_max:
            raise OutOfCertifiedRange(
                f"index {n} outside certified range |n| <= {geometry.n_max}"
            )
        raise OutOfCertifiedRange(
            f"contraction margin {geometry.contraction_margin:.6g} >= 1"
        )
    ell = problem.ell
    center = ball_center(n, ell)
    z = 0.0 + 0.0j
    trace = [z] if keep_iterates else None
    step = math.inf
    iterations = 0
    for m in range(1, max_iter + 1):
        fval = eval_F(problem, center + z)
        if fval == 0:
            raise LogArgumentZero(f"F vanished at iterate {center + z}")
        z_new = -0.25j / ell * cmath.log(fval)
        step = abs(z_new - z)
        z = z_new
        iterations = m
        if trace is not None:
            trace.append(z)
        if step < tol:
            break
    else:
        raise NotConverged(
            f"no convergence for index {n} after {max_iter} iterations",
            last_iterate=center + z,
            last_step=step,
        )
    k = center + z
    return LadderEntry(
        n=n,
        center=center,
        k=k,
        iterations=iterations,
        last_step=step,
        residual=residual(problem, k),
        classification=classify(k, imag_tol, zero_tol),
        apriori_bound=apriori_error_bound(iterations, ell, geometry.sup_F_prime),
        certified=certified,
        iterates=tuple(trace) if trace is not None else None,
    )


def solve_ladder(
    problem: BipartiteProblem,
    geometry: DiskGeometry,
    n_lo: int,
    n_hi: int,
    tol: float = 1e-15,
    max_iter: int = 200,
    imag_tol: float = 1e-12,
    zero_tol: float = 1e-12,
    best_effort: bool = False,
    keep_iterates: bool = False,
):
    """Solve all indices n_lo..n_hi, aggregating per-entry failures.

    Returns (entries, failures): entries ordered by n, failures a list of
    (n, error) pairs for indices that raised; nothing aborts the sweep.
    """
    entries: list[LadderEntry] = []
    failures: list[tuple[int, ResladderError]] = []
    for n in range(n_lo, n_hi + 1):
        try:
            entries.append(
                solve_entry(
                    problem,
                    geometry,
                    n,
                    tol=tol,
                    max_iter=max_iter,
                    imag_tol=imag_tol,
                    zero_tol=zero_tol,
                    best_effort=best_effort,
                    keep_iterates=keep_iterates,
                )
            )
        except ResladderError as exc:
            failures.append((n, exc))
    return entries, failures
