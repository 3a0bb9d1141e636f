"""Independent cross-checks used by the tests.

The fixed-step RK4 integrator below shares no code with the package's
propagator: it integrates the second-order ODE X'' = (v - k^2) X directly,
piece by piece, from the plane-wave data on the incoming side.  At 4000 steps
per unit length its boundary values agree with closed-form propagation to
~1e-14, comfortably below the 1e-10 tolerance the tests assert.
"""

import numpy as np

import resladder as rl
from resladder.jost import Side

RK4_STEPS_PER_UNIT = 4000


def rk4_boundary(half, side, k):
    """Boundary data of the outgoing-normalized solution, by brute-force RK4.

    Returns (value, derivative) at x = 0 for the minus half (supported on
    [-d, 0]) or at x = d for the plus half (supported on [0, d]).  `k` may be
    a scalar or an array.
    """
    k = np.asarray(k, dtype=complex)
    d = rl.support_width(half)
    x_left = -d if side is Side.MINUS else 0.0
    val = np.exp(-1j * k * x_left)
    der = -1j * k * val
    if isinstance(half, rl.Delta):
        return val, der + half.beta * val
    for j, v in enumerate(half.values):
        h = half.breaks[j + 1] - half.breaks[j]
        n = max(int(RK4_STEPS_PER_UNIT * h), 50)
        dx = h / n
        c = v - k * k
        for _ in range(n):
            k1v, k1d = der, c * val
            k2v, k2d = der + 0.5 * dx * k1d, c * (val + 0.5 * dx * k1v)
            k3v, k3d = der + 0.5 * dx * k2d, c * (val + 0.5 * dx * k2v)
            k4v, k4d = der + dx * k3d, c * (val + dx * k3v)
            val = val + dx / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
            der = der + dx / 6 * (k1d + 2 * k2d + 2 * k3d + k4d)
    return val, der
