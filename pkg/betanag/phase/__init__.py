"""
Phase transition of the family: A_β/B_β against 1/6, the critical β and rate bounds.
"""

from .coefficients import (
    classify_regime,
    coefficients_AB,
    contraction_rate,
    h_coefficients,
    h_denominator,
    h_derivative,
    h_poly,
    ratio_AB,
    step_window,
)
from .critical import beta_critical_bisection, beta_critical_closed, quadratic_roots
from .rates import (
    expanded_subcritical_fraction,
    gap_energy_factor,
    initial_energy_constant,
    rate_bound,
    rate_factor,
    subcritical_rate_factor,
    supercritical_rate_factor,
)
from .report import analyze, regime_flips, sweep_phase

__all__ = [
    "analyze",
    "beta_critical_bisection",
    "beta_critical_closed",
    "classify_regime",
    "coefficients_AB",
    "contraction_rate",
    "expanded_subcritical_fraction",
    "gap_energy_factor",
    "h_coefficients",
    "h_denominator",
    "h_derivative",
    "h_poly",
    "initial_energy_constant",
    "quadratic_roots",
    "rate_bound",
    "rate_factor",
    "ratio_AB",
    "regime_flips",
    "step_window",
    "subcritical_rate_factor",
    "supercritical_rate_factor",
    "sweep_phase",
]
