"""Resonance ladders of 1D Schrodinger operators with bipartite potentials.

Core pipeline: build a problem (``make_problem``), certify a disk where the
characteristic function stays near 1 (``disk_geometry``), solve the ladder
of characteristic roots by contraction (``solve_ladder``), approximate them
by explicit series with remainder bounds (``series_at_ball_center``,
``series_at_zero``), and verify everything independently by the argument
principle (``cross_validate``).  ``resladder.service`` wraps the pipeline in
an HTTP service; ``resladder.cli`` is a thin client for it.
"""

from .characteristic import (
    CONTRACTION_THRESHOLD,
    DiskGeometry,
    ScatteringCoefficients,
    cauchy_derivative,
    disk_geometry,
    estimate_radius,
    eval_F,
    eval_F_delta_closed_form,
    eval_F_prime,
    eval_F_step_closed_form,
    index_bound,
    scattering_coefficients,
)
from .errors import (
    ConfigError,
    CotangentPole,
    DenominatorVanishes,
    DerivativeVanished,
    EvaluationFailed,
    InvalidHalf,
    LogArgumentZero,
    NoAdmissibleRadius,
    NonPositiveSeparation,
    NotConverged,
    NotPointwiseEvaluable,
    OutOfCertifiedRange,
    PhaseTrackingUnresolved,
    ResladderError,
    ZeroOnContour,
    ZeroStrength,
    ZeroWavenumber,
)
from .jost import (
    AdmissibilityReport,
    BoundaryData,
    Side,
    apply_delta_jump,
    check_admissibility,
    jost_boundary,
    propagate_constant,
)
from .ladder import (
    Classification,
    LadderEntry,
    apriori_error_bound,
    ball_center,
    ball_radius,
    classify,
    residual,
    solve_entry,
    solve_ladder,
)
from .oracle import (
    ValidationReport,
    char_g,
    char_g_prime,
    cross_validate,
    newton_refine,
    winding_number,
)
from .potentials import (
    BipartiteProblem,
    Delta,
    PiecewiseConstant,
    eval_potential,
    make_problem,
    step_half,
    support_width,
    validate_half,
)
from .series import (
    SeriesApprox,
    SeriesCenter,
    series_at_ball_center,
    series_at_zero,
    three_term_delta,
    three_term_step,
)

try:
    from importlib.metadata import version as _version

    __version__ = _version("resladder")
except Exception:
    __version__ = "0+unknown"

__all__ = [
    "CONTRACTION_THRESHOLD",
    "AdmissibilityReport",
    "BipartiteProblem",
    "BoundaryData",
    "Classification",
    "ConfigError",
    "CotangentPole",
    "Delta",
    "DenominatorVanishes",
    "DerivativeVanished",
    "DiskGeometry",
    "EvaluationFailed",
    "InvalidHalf",
    "LadderEntry",
    "LogArgumentZero",
    "NoAdmissibleRadius",
    "NonPositiveSeparation",
    "NotConverged",
    "NotPointwiseEvaluable",
    "OutOfCertifiedRange",
    "PhaseTrackingUnresolved",
    "PiecewiseConstant",
    "ResladderError",
    "ScatteringCoefficients",
    "SeriesApprox",
    "SeriesCenter",
    "Side",
    "ValidationReport",
    "ZeroOnContour",
    "ZeroStrength",
    "ZeroWavenumber",
    "apply_delta_jump",
    "apriori_error_bound",
    "ball_center",
    "ball_radius",
    "cauchy_derivative",
    "char_g",
    "char_g_prime",
    "check_admissibility",
    "classify",
    "cross_validate",
    "disk_geometry",
    "estimate_radius",
    "eval_F",
    "eval_F_delta_closed_form",
    "eval_F_prime",
    "eval_F_step_closed_form",
    "eval_potential",
    "index_bound",
    "jost_boundary",
    "make_problem",
    "newton_refine",
    "propagate_constant",
    "residual",
    "scattering_coefficients",
    "series_at_ball_center",
    "series_at_zero",
    "solve_entry",
    "solve_ladder",
    "step_half",
    "support_width",
    "three_term_delta",
    "three_term_step",
    "validate_half",
    "winding_number",
]
