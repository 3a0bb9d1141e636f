"""Shared fixtures: reference problems, their certified disks, and solved ladders.

Everything here is session-scoped because geometry estimation and full-ladder
solves dominate the suite's runtime; all tests treat these objects as
immutable.
"""

import pytest

import resladder as rl


@pytest.fixture(scope="session")
def delta_problem():
    """Two unit-strength point interactions separated by 2*100."""
    return rl.make_problem(rl.Delta(1.0), rl.Delta(1.0), 100.0)


@pytest.fixture(scope="session")
def delta_geometry(delta_problem):
    return rl.disk_geometry(delta_problem)


@pytest.fixture(scope="session")
def delta_ladder(delta_problem, delta_geometry):
    entries, failures = rl.solve_ladder(
        delta_problem, delta_geometry, -delta_geometry.n_max, delta_geometry.n_max
    )
    assert not failures
    return entries


@pytest.fixture(scope="session")
def barrier_well_problem():
    """Repulsive unit-width barrier (+4) on the left, unit well (-1) on the right."""
    return rl.make_problem(rl.step_half(2j), rl.step_half(1.0), 100.0)


@pytest.fixture(scope="session")
def barrier_well_geometry(barrier_well_problem):
    return rl.disk_geometry(barrier_well_problem)


@pytest.fixture(scope="session")
def barrier_well_ladder(barrier_well_problem, barrier_well_geometry):
    g = barrier_well_geometry
    entries, failures = rl.solve_ladder(barrier_well_problem, g, -g.n_max, g.n_max)
    assert not failures
    return entries


@pytest.fixture(scope="session")
def gain_loss_problem():
    """Complex step strengths, chosen so the ladder crosses the real axis."""
    return rl.make_problem(rl.step_half(3 + 2j), rl.step_half(1.0), 100.0)


@pytest.fixture(scope="session")
def gain_loss_geometry(gain_loss_problem):
    return rl.disk_geometry(gain_loss_problem)


@pytest.fixture(scope="session")
def gain_loss_ladder(gain_loss_problem, gain_loss_geometry):
    g = gain_loss_geometry
    entries, failures = rl.solve_ladder(gain_loss_problem, g, -g.n_max, g.n_max)
    assert not failures
    return entries
