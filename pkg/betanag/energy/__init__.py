"""
Lyapunov energy functionals, continuous and discrete, with their decrement checks.
"""

from .continuous import (
    check_continuous_decay,
    continuous_decrement_delta,
    continuous_energy,
    continuous_energy_derivative,
    energy_along,
)
from .discrete import check_discrete_decrement, discrete_energy, energy_sequence

__all__ = [
    "check_continuous_decay",
    "check_discrete_decrement",
    "continuous_decrement_delta",
    "continuous_energy",
    "continuous_energy_derivative",
    "discrete_energy",
    "energy_along",
    "energy_sequence",
]
