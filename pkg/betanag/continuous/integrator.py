"""
Fixed-step classical Runge-Kutta integration of second-order systems.
"""

import logging
import math
from functools import partial
from typing import Callable, Optional, Tuple

import numpy as np

from ..core.errors import IntegrationBlowupError, ParameterDomainError
from ..core.logging import log_execution_time
from ..core.models import OdeSolution
from ..methods.steppers import initial_velocity
from ..objectives.base import Objective
from .fields import hr_rhs, lr_rhs

logger = logging.getLogger(__name__)

VectorField = Callable[[np.ndarray, np.ndarray], Tuple[np.ndarray, np.ndarray]]

STEPS_PER_SCALE = 50

__all__ = [
    "auto_step",
    "initial_velocity",
    "integrate",
    "solve_high_resolution",
    "solve_low_resolution",
]


def auto_step(s: float, lip: float) -> float:
    """
    h = min(√s, 1/√L)/50, shrunk so that √s/h is an integer.

    Grid points then land exactly on every t = k√s.
    """
    rs = math.sqrt(s)
    h = min(rs, 1.0 / math.sqrt(lip)) / STEPS_PER_SCALE
    per_step = math.ceil(rs / h - 1e-9)
    return rs / per_step


@log_execution_time(logger)
def integrate(
    rhs: VectorField,
    x0: np.ndarray,
    v0: np.ndarray,
    t_end: float,
    h: float,
    *,
    beta: float,
    step: float,
    resolution: str = "high",
) -> OdeSolution:
    """
    Integrate (Ẋ, V̇) = rhs(X, V) with classical RK4 on a uniform grid.

    Args:
        rhs: Vector field returning (dX, dV)
        x0: X(0)
        v0: Ẋ(0)
        t_end: Final time; the grid ends at the first multiple of h ≥ t_end
        h: Integrator step
        beta: Gradient-correction weight of the modelled method
        step: Method step s the solution is compared against
        resolution: "high" or "low"

    Raises:
        ParameterDomainError: h ≤ 0, t_end < h or s ≤ 0
        IntegrationBlowupError: Non-finite state
    """
    if not h > 0:
        raise ParameterDomainError(f"Integrator step must be positive, got {h}")
    if not t_end >= h:
        raise ParameterDomainError(f"t_end must be at least h, got t_end={t_end}, h={h}")
    if not step > 0:
        raise ParameterDomainError(f"Method step must be positive, got {step}")

    n_steps = math.ceil(t_end / h - 1e-9)
    dim = len(x0)
    positions = np.empty((n_steps + 1, dim))
    velocities = np.empty((n_steps + 1, dim))
    X = np.array(x0, dtype=np.float64)
    V = np.array(v0, dtype=np.float64)
    positions[0], velocities[0] = X, V

    half = 0.5 * h
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(1, n_steps + 1):
            k1x, k1v = rhs(X, V)
            k2x, k2v = rhs(X + half * k1x, V + half * k1v)
            k3x, k3v = rhs(X + half * k2x, V + half * k2v)
            k4x, k4v = rhs(X + h * k3x, V + h * k3v)
            X = X + (h / 6.0) * (k1x + 2.0 * (k2x + k3x) + k4x)
            V = V + (h / 6.0) * (k1v + 2.0 * (k2v + k3v) + k4v)
            if not (np.all(np.isfinite(X)) and np.all(np.isfinite(V))):
                raise IntegrationBlowupError(i * h)
            positions[i], velocities[i] = X, V

    return OdeSolution(
        times=h * np.arange(n_steps + 1),
        positions=positions,
        velocities=velocities,
        beta=beta,
        step=step,
        integrator_step=h,
        resolution=resolution,
    )


def solve_high_resolution(
    obj: Objective,
    beta: float,
    s: float,
    x0,
    t_end: float,
    h: Optional[float] = None,
    fallback: bool = False,
) -> OdeSolution:
    """High-resolution solution from X(0) = x0, Ẋ(0) = -2√s∇f(x0)/(1 + √(μs))."""
    x0 = obj.check_point(x0, "x0")
    h = h or auto_step(s, obj.lip)
    logger.debug(f"High-resolution ODE: beta={beta}, s={s}, h={h:.4g}, t_end={t_end}")
    rhs = partial(hr_rhs, beta, s, obj, fallback=fallback)
    return integrate(rhs, x0, initial_velocity(obj, s, x0), t_end, h, beta=beta, step=s)


def solve_low_resolution(
    obj: Objective, s: float, x0, t_end: float, h: Optional[float] = None
) -> OdeSolution:
    """Low-resolution solution with the same initial data as the high-resolution one."""
    x0 = obj.check_point(x0, "x0")
    h = h or auto_step(s, obj.lip)
    logger.debug(f"Low-resolution ODE: s={s}, h={h:.4g}, t_end={t_end}")
    rhs = partial(lr_rhs, obj)
    return integrate(
        rhs, x0, initial_velocity(obj, s, x0), t_end, h, beta=0.0, step=s, resolution="low"
    )
