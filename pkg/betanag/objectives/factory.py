"""
Factory for objectives described in experiment configs.
"""

import logging
from typing import Any, Dict

from ..core.config import ObjectiveConfig
from ..core.errors import InvalidObjectiveError
from .base import Objective

logger = logging.getLogger(__name__)


def get_objective(kind: str, params: Dict[str, Any]) -> Objective:
    """
    Build an objective by kind.

    Args:
        kind: 'quadratic' or 'logsumexp'
        params: Constructor arguments (eigenvalues/x_star, or dimension/mu/seed/smoothness)

    Raises:
        InvalidObjectiveError: Unknown kind
    """
    name = kind.lower().replace("_", "-")

    if name == "quadratic":
        from .quadratic import make_quadratic

        return make_quadratic(params["eigenvalues"], params.get("x_star"))
    elif name in ("logsumexp", "log-sum-exp", "smooth-nonquadratic"):
        from .logsumexp import make_smooth_nonquadratic

        return make_smooth_nonquadratic(
            dimension=int(params["dimension"]),
            mu=float(params["mu"]),
            seed=int(params.get("seed", 0)),
            smoothness=float(params.get("smoothness", 1.0)),
        )

    raise InvalidObjectiveError(f"Unknown objective kind: {kind}")


def build_objective(config: ObjectiveConfig) -> Objective:
    """Build the objective an experiment config describes."""
    params = config.to_dict()
    params.pop("kind")
    params.pop("x0")
    objective = get_objective(config.kind, params)
    logger.info(f"Objective: {objective.name} (mu={objective.mu}, L={objective.lip})")
    return objective
