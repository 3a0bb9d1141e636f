"""Acceptance gate: one test per criterion, pinned tolerances, printed verdicts.

Reference problems (all at separation ell = 100 unless swept):

* twin unit deltas            -- exactly solvable anchor family
* barrier/well steps          -- +4 barrier left, -1 well right (real line case)
* gain/loss steps             -- complex strength 3+2i left, -1 well right

Each test prints ``ACCEPTANCE <criterion>: PASS`` only after its assertions
held, so the -v log carries one verdict line per criterion.
"""

import math

import numpy as np

import resladder as rl

IMAG_TOL = 1e-12
STEP_TOL = 1e-15
MAX_ITERATIONS = 15
RESIDUAL_CEILING = 1e-11
CLOSED_FORM_RTOL = 1e-10
NORMALIZATION_ATOL = 1e-12
VERIFY_DISTANCE = 1e-12
DECAY_SLOPE = -4.0
DECAY_SLOPE_TOL = 0.3
SYMMETRY_ATOL = 1e-10
SWEEP_ELLS = (50.0, 100.0, 200.0)
SWEEP_INDICES = (1, 3, 5)


def _ladder_map(entries):
    return {e.n: e for e in entries}


def test_c1_barrier_well_ladder_is_purely_resonant(
    barrier_well_problem, barrier_well_geometry, barrier_well_ladder
):
    """Every certified rung except n = 0 is a resonance in the lower half-plane."""
    assert barrier_well_geometry.contraction_margin < 1.0
    assert barrier_well_geometry.n_max >= 10
    for e in barrier_well_ladder:
        assert e.certified
        assert e.iterations <= MAX_ITERATIONS
        assert e.last_step < STEP_TOL
        if e.n == 0:
            assert e.classification is rl.Classification.NEAR_ZERO
        else:
            assert e.classification is rl.Classification.RESONANCE
            assert e.k.imag < -IMAG_TOL
    print("ACCEPTANCE barrier-well ladder purely resonant: PASS")


def test_c2_gain_loss_ladder_crosses_the_real_axis(
    gain_loss_geometry, gain_loss_ladder
):
    """Complex gain/loss strengths place rungs on both sides of the real axis."""
    assert gain_loss_geometry.contraction_margin < 1.0
    eigen = [e for e in gain_loss_ladder if e.k.imag > IMAG_TOL]
    reson = [e for e in gain_loss_ladder if e.k.imag < -IMAG_TOL]
    assert eigen, "expected at least one eigenvalue rung"
    assert reson, "expected at least one resonance rung"
    for e in gain_loss_ladder:
        assert e.iterations <= MAX_ITERATIONS
        assert e.last_step < STEP_TOL
    print("ACCEPTANCE gain-loss ladder crosses the real axis: PASS")


def test_c3_characteristic_residuals(
    delta_problem,
    delta_ladder,
    barrier_well_problem,
    barrier_well_ladder,
    gain_loss_problem,
    gain_loss_ladder,
):
    """|e^{4ik ell} - F(k)| stays below the ceiling on every converged rung."""
    for problem, ladder in (
        (delta_problem, delta_ladder),
        (barrier_well_problem, barrier_well_ladder),
        (gain_loss_problem, gain_loss_ladder),
    ):
        for e in ladder:
            assert e.residual <= RESIDUAL_CEILING
            assert rl.residual(problem, e.k) <= RESIDUAL_CEILING
    print("ACCEPTANCE characteristic residuals below 1e-11: PASS")


def test_c4_closed_form_agreement(
    delta_problem, delta_geometry, barrier_well_problem, barrier_well_geometry,
    gain_loss_problem,
):
    """Transfer-matrix F matches the two independent closed forms pointwise."""
    rng = np.random.default_rng(2024)
    for problem, geometry, closed in (
        (delta_problem, delta_geometry, lambda k: rl.eval_F_delta_closed_form(1.0, 1.0, k)),
        (barrier_well_problem, barrier_well_geometry, lambda k: rl.eval_F_step_closed_form(2j, 1.0, k)),
    ):
        radii = geometry.radius * np.sqrt(rng.uniform(0.0, 1.0, 50))
        angles = rng.uniform(0.0, 2.0 * np.pi, 50)
        for k in radii * np.exp(1j * angles):
            direct = rl.eval_F(problem, complex(k))
            reference = closed(complex(k))
            assert abs(direct - reference) <= CLOSED_FORM_RTOL * abs(reference)
    for problem in (delta_problem, barrier_well_problem, gain_loss_problem):
        assert abs(rl.eval_F(problem, 0.0) - 1.0) <= NORMALIZATION_ATOL
    print("ACCEPTANCE closed-form agreement within 1e-10: PASS")


def test_c5_argument_principle_verification(
    delta_problem,
    delta_geometry,
    delta_ladder,
    barrier_well_problem,
    barrier_well_geometry,
    barrier_well_ladder,
    gain_loss_problem,
    gain_loss_geometry,
    gain_loss_ladder,
):
    """Winding number 1 around every rung ball; Newton reproduces each root."""
    for problem, geometry, ladder in (
        (delta_problem, delta_geometry, delta_ladder),
        (barrier_well_problem, barrier_well_geometry, barrier_well_ladder),
        (gain_loss_problem, gain_loss_geometry, gain_loss_ladder),
    ):
        reports = rl.cross_validate(problem, geometry, ladder, tol=VERIFY_DISTANCE)
        for r in reports:
            assert r.error is None
            assert r.winding == 1
            assert r.distance_to_ladder <= VERIFY_DISTANCE
            assert r.agrees
    print("ACCEPTANCE argument-principle verification: PASS")


def test_c6_three_term_asymptotics_decay_rate():
    """Solver-minus-three-term error falls off like ell^-4 for both families."""
    families = (
        (
            lambda ell: rl.make_problem(rl.Delta(1.0), rl.Delta(1.0), ell),
            lambda n, ell: rl.three_term_delta(1.0, 1.0, n, ell),
        ),
        (
            lambda ell: rl.make_problem(rl.step_half(2j), rl.step_half(1.0), ell),
            lambda n, ell: rl.three_term_step(2j, 1.0, n, ell),
        ),
    )
    for build, reference in families:
        for n in SWEEP_INDICES:
            errors = []
            for ell in SWEEP_ELLS:
                problem = build(ell)
                geometry = rl.disk_geometry(problem)
                entry = rl.solve_entry(problem, geometry, n, best_effort=True)
                errors.append(abs(entry.k - reference(n, ell)))
            slope = np.polyfit(np.log(SWEEP_ELLS), np.log(errors), 1)[0]
            assert abs(slope - DECAY_SLOPE) <= DECAY_SLOPE_TOL
    print("ACCEPTANCE three-term asymptotics decay like ell^-4: PASS")


def test_c7_certified_error_bounds(
    delta_problem,
    delta_geometry,
    delta_ladder,
    barrier_well_problem,
    barrier_well_geometry,
    barrier_well_ladder,
):
    """Series remainders and a-priori iterate bounds dominate the true errors."""
    for problem, geometry, ladder in (
        (delta_problem, delta_geometry, delta_ladder),
        (barrier_well_problem, barrier_well_geometry, barrier_well_ladder),
    ):
        roots = _ladder_map(ladder)
        for order in (1, 2, 3, 4):
            for n, entry in roots.items():
                approx = rl.series_at_ball_center(problem, geometry, n, order)
                assert abs(approx.value - entry.k) <= approx.bound
        for n in roots:
            entry = rl.solve_entry(problem, geometry, n, keep_iterates=True)
            for m, z in enumerate(entry.iterates):
                if m == 0:
                    continue
                err = abs(entry.k - (entry.center + z))
                bound = rl.apriori_error_bound(m, problem.ell, geometry.sup_F_prime)
                assert err <= bound
    print("ACCEPTANCE certified error bounds dominate true errors: PASS")


def test_c8_conjugation_symmetry(delta_ladder, barrier_well_ladder):
    """Real potentials force the rung reflection k_{-n} = -conj(k_n)."""
    for ladder in (delta_ladder, barrier_well_ladder):
        roots = _ladder_map(ladder)
        top = max(roots)
        for n in range(1, top + 1):
            assert abs(roots[-n].k + roots[n].k.conjugate()) <= SYMMETRY_ATOL
    print("ACCEPTANCE conjugation symmetry of the ladder: PASS")
