"""
Distance between a discrete trajectory and an ODE solution at t = k√s.
"""

import logging
import math

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from ..core.errors import ConfigurationError, SpanError
from ..core.models import OdeSolution, Trajectory

logger = logging.getLogger(__name__)

GRID_RTOL = 1e-9


def sample_at(sol: OdeSolution, times: np.ndarray) -> np.ndarray:
    """
    X(t) at the requested times.

    Exact grid lookup when every time is a grid point; otherwise a cubic
    Hermite interpolant built from the stored positions and velocities.
    """
    h = sol.integrator_step
    idx = np.rint(times / h)
    on_grid = np.all(np.abs(times / h - idx) <= GRID_RTOL * np.maximum(1.0, idx))
    if on_grid:
        return sol.positions[idx.astype(int)]

    logger.warning(
        f"Sample times are off the integrator grid (h={h:.4g}); using cubic Hermite interpolation"
    )
    spline = CubicHermiteSpline(sol.times, sol.positions, sol.velocities, axis=0)
    return spline(times)


def deviation(traj: Trajectory, sol: OdeSolution, T: float) -> float:
    """
    max over 0 ≤ k ≤ ⌊T/√s⌋ of ‖x_k - X(k√s)‖.

    Raises:
        ConfigurationError: Trajectory and solution use different s
        SpanError: T exceeds the trajectory or the solution
    """
    s = traj.config.step
    if not math.isclose(s, sol.step, rel_tol=1e-12):
        raise ConfigurationError(f"Trajectory uses s={s}, ODE solution s={sol.step}")

    rs = math.sqrt(s)
    K = int(math.floor(T / rs + 1e-9))
    if K > traj.num_steps:
        raise SpanError(f"T={T} needs {K} steps, trajectory has {traj.num_steps}")
    if K * rs > sol.t_end * (1 + 1e-12):
        raise SpanError(f"T={T} exceeds the ODE solution span {sol.t_end}")

    times = rs * np.arange(K + 1)
    X = sample_at(sol, times)
    return float(np.max(np.linalg.norm(traj.iterates[: K + 1] - X, axis=1)))
