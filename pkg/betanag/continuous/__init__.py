"""
High- and low-resolution ODEs, their integration and the discrete/continuous deviation.
"""

from .bounds import (
    continuous_rate_bound,
    continuous_rate_check,
    continuous_rate_constant,
    sup_norm_growth,
)
from .deviation import deviation, sample_at
from .fields import hr_rhs, lr_rhs
from .integrator import (
    auto_step,
    initial_velocity,
    integrate,
    solve_high_resolution,
    solve_low_resolution,
)

__all__ = [
    "auto_step",
    "continuous_rate_bound",
    "continuous_rate_check",
    "continuous_rate_constant",
    "deviation",
    "hr_rhs",
    "initial_velocity",
    "integrate",
    "lr_rhs",
    "sample_at",
    "solve_high_resolution",
    "solve_low_resolution",
    "sup_norm_growth",
]
