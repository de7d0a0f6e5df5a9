"""
Core module for BetaNAG.

Contains the domain models, error hierarchy, configuration, logging and
experiment orchestration.
"""

from .errors import BetaNAGError
from .models import (
    BoundReport,
    Cell,
    CertificationReport,
    CheckOutcome,
    EnergySeries,
    ExperimentSummary,
    MethodConfig,
    OdeSolution,
    PhaseReport,
    RateBound,
    Regime,
    StepWindow,
    Trajectory,
    Variant,
)

__all__ = [
    "BetaNAGError",
    "BoundReport",
    "Cell",
    "CertificationReport",
    "CheckOutcome",
    "EnergySeries",
    "ExperimentSummary",
    "MethodConfig",
    "OdeSolution",
    "PhaseReport",
    "RateBound",
    "Regime",
    "StepWindow",
    "Trajectory",
    "Variant",
]
