"""Bipartite compactly supported potentials on the line.

A problem consists of two half-potentials separated by a gap: the minus half
supported on [-ell - d_minus, -ell] and the plus half on [ell, ell + d_plus],
with 2*ell > 0 the separation between the inner support edges.  Each half is
described in local coordinates where its support is [0, d]:

* ``Delta(beta)``: a point interaction beta * delta(x) at the support edge
  (zero width), beta a nonzero complex strength.
* ``PiecewiseConstant(breaks, values)``: finitely many constant complex
  pieces, ``values[j]`` on ``[breaks[j], breaks[j+1])``.

Both variants are frozen (hashable) so problems can key caches downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidHalf, NonPositiveSeparation, NotPointwiseEvaluable

__all__ = [
    "Delta",
    "PiecewiseConstant",
    "BipartiteProblem",
    "step_half",
    "validate_half",
    "make_problem",
    "support_width",
    "eval_potential",
]


@dataclass(frozen=True)
class Delta:
    """Point interaction beta * delta at the support edge."""

    beta: complex


@dataclass(frozen=True)
class PiecewiseConstant:
    """Piecewise-constant profile: values[j] on [breaks[j], breaks[j+1])."""

    breaks: tuple[float, ...]
    values: tuple[complex, ...]


Half = Delta | PiecewiseConstant


def step_half(beta: complex, width: float = 1.0) -> PiecewiseConstant:
    """Single constant piece of value -beta**2 on [0, width].

    The sign convention makes ``beta`` the (possibly complex) wavenumber
    inside the piece at k = 0, matching the closed-form factor of the
    characteristic function for one-piece halves.
    """
    beta = complex(beta)
    return PiecewiseConstant(breaks=(0.0, float(width)), values=(-beta * beta,))


def _finite(z) -> bool:
    z = complex(z)
    return math.isfinite(z.real) and math.isfinite(z.imag)


def validate_half(half: Half, label: str = "half") -> None:
    """Check the structural invariants of one half-potential.

    Raises InvalidHalf naming ``label`` and the violated invariant.
    """
    if isinstance(half, Delta):
        if not _finite(half.beta):
            raise InvalidHalf(f"{label}: delta strength must be finite")
        if half.beta == 0:
            raise InvalidHalf(f"{label}: delta strength must be nonzero")
        return
    if isinstance(half, PiecewiseConstant):
        breaks, values = half.breaks, half.values
        if len(breaks) < 2:
            raise InvalidHalf(f"{label}: need at least one piece")
        if len(values) != len(breaks) - 1:
            raise InvalidHalf(
                f"{label}: expected {len(breaks) - 1} piece values, got {len(values)}"
            )
        for x in breaks:
            if not math.isfinite(x):
                raise InvalidHalf(f"{label}: breakpoints must be finite")
        if breaks[0] != 0.0:
            raise InvalidHalf(f"{label}: support must start at 0")
        for a, b in zip(breaks, breaks[1:]):
            if not b > a:
                raise InvalidHalf(f"{label}: breakpoints must strictly increase")
        for v in values:
            if not _finite(v):
                raise InvalidHalf(f"{label}: piece values must be finite")
        return
    raise InvalidHalf(f"{label}: unknown half-potential variant {type(half).__name__}")


@dataclass(frozen=True)
class BipartiteProblem:
    """Validated pair of half-potentials plus half-separation ell."""

    minus: Half
    plus: Half
    ell: float


def make_problem(minus: Half, plus: Half, ell: float) -> BipartiteProblem:
    """Validate and assemble a bipartite problem.

    ell is half the distance between the inner support edges; it must be a
    finite positive real.  Raises NonPositiveSeparation or InvalidHalf.
    """
    try:
        ell = float(ell)
    except (TypeError, ValueError):
        raise NonPositiveSeparation("ell must be a real number") from None
    if not math.isfinite(ell) or ell <= 0.0:
        raise NonPositiveSeparation("ell must be positive")
    validate_half(minus, "minus")
    validate_half(plus, "plus")
    return BipartiteProblem(minus=minus, plus=plus, ell=ell)


def support_width(half: Half) -> float:
    """Width d of the support [0, d] in local coordinates (0 for a delta)."""
    if isinstance(half, Delta):
        return 0.0
    return half.breaks[-1]


def eval_potential(half: Half, x: float) -> complex:
    """Pointwise value of a piecewise-constant half at local coordinate x.

    Right-continuous at breakpoints; zero outside [0, d).  Delta halves are
    not pointwise evaluable and raise NotPointwiseEvaluable.
    """
    if isinstance(half, Delta):
        raise NotPointwiseEvaluable("delta potential has no pointwise values")
    breaks = half.breaks
    if x < breaks[0] or x >= breaks[-1]:
        return 0.0 + 0.0j
    for j in range(len(half.values)):
        if breaks[j] <= x < breaks[j + 1]:
            return complex(half.values[j])
    return 0.0 + 0.0j
