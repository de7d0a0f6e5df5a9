"""
Residuals of the identities a trajectory of the family must satisfy.
"""

import math

import numpy as np

from ..core.errors import ConfigurationError
from ..core.models import Trajectory, Variant
from ..objectives.base import Objective
from .steppers import sqrt_mu_s


def _gradients(traj: Trajectory, obj: Objective) -> np.ndarray:
    if traj.config.variant == Variant.GRADIENT_DESCENT:
        raise ConfigurationError("Momentum identities do not apply to gradient descent")
    return np.array([obj.gradient(x) for x in traj.iterates])


def rearranged_residuals(traj: Trajectory, obj: Objective) -> np.ndarray:
    """
    Max-abs residual per step k = 1..K-1 of

        (x_{k+1} + x_{k-1} - 2x_k)/s + (2r/(1-r))(x_{k+1} - x_k)/s
            + β(∇f(x_k) - ∇f(x_{k-1})) + ((1+r)/(1-r))∇f(x_k) = 0
    """
    s, beta = traj.config.step, traj.config.effective_beta
    r = sqrt_mu_s(obj.mu, s)
    x = traj.iterates
    g = _gradients(traj, obj)
    if len(x) < 3:
        return np.zeros(0)

    second = (x[2:] + x[:-2] - 2.0 * x[1:-1]) / s
    first = (2.0 * r / (1.0 - r)) * (x[2:] - x[1:-1]) / s
    correction = beta * (g[1:-1] - g[:-2])
    drift = ((1.0 + r) / (1.0 - r)) * g[1:-1]
    return np.max(np.abs(second + first + correction + drift), axis=1)


def velocity_recursion_residuals(traj: Trajectory, obj: Objective) -> np.ndarray:
    """
    Max-abs residual per step k = 1..K-1 of

        v_k - v_{k-1} + (2r/(1-r))v_k + β√s(∇f(x_k) - ∇f(x_{k-1}))
            + ((1+r)/(1-r))√s∇f(x_k) = 0

    using the stored velocities.
    """
    s, beta = traj.config.step, traj.config.effective_beta
    r = sqrt_mu_s(obj.mu, s)
    rs = math.sqrt(s)
    v = traj.velocities
    g = _gradients(traj, obj)
    if len(v) < 2:
        return np.zeros(0)

    res = (
        v[1:]
        - v[:-1]
        + (2.0 * r / (1.0 - r)) * v[1:]
        + beta * rs * (g[1:-1] - g[:-2])
        + ((1.0 + r) / (1.0 - r)) * rs * g[1:-1]
    )
    return np.max(np.abs(res), axis=1)
