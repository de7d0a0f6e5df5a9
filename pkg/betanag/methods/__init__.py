"""
The β-interpolated momentum family, its two formulations and baselines.
"""

from .driver import observed_contraction, run
from .residuals import rearranged_residuals, velocity_recursion_residuals
from .steppers import (
    init_state,
    initial_velocity,
    initial_y_beta,
    momentum,
    sqrt_mu_s,
    step_gradient_descent,
    step_single_variable,
    step_two_sequence,
)

__all__ = [
    "init_state",
    "initial_velocity",
    "initial_y_beta",
    "momentum",
    "observed_contraction",
    "rearranged_residuals",
    "run",
    "sqrt_mu_s",
    "step_gradient_descent",
    "step_single_variable",
    "step_two_sequence",
    "velocity_recursion_residuals",
]
