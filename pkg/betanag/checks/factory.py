"""
Factory for experiment checks.
"""

import logging
from typing import Any, Dict

from ..core.providers import Check

logger = logging.getLogger(__name__)


def get_check(check_name: str, config: Dict[str, Any]) -> Check:
    """
    Get a check by name.

    Args:
        check_name: energy-decrement, continuous-bound, deviation-ladder or phase-sweep
        config: Check configuration

    Returns:
        Check instance

    Raises:
        ValueError: If the check is not supported
    """
    name = check_name.lower().replace("_", "-").replace(" ", "-")

    if name == "energy-decrement":
        from .energy_decrement import EnergyDecrementCheck

        return EnergyDecrementCheck(config)
    elif name == "continuous-bound":
        from .continuous_bound import ContinuousBoundCheck

        return ContinuousBoundCheck(config)
    elif name == "deviation-ladder":
        from .deviation_ladder import DeviationLadderCheck

        return DeviationLadderCheck(config)
    elif name == "phase-sweep":
        from .phase_sweep import PhaseSweepCheck

        return PhaseSweepCheck(config)

    raise ValueError(f"Unsupported check: {check_name}")
