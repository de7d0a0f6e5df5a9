"""
Iteration driver producing fully recorded trajectories.
"""

import logging
import math

import numpy as np

from ..core.errors import DivergenceError
from ..core.models import MethodConfig, Trajectory, Variant
from ..objectives.base import Objective
from .steppers import (
    SINGLE_VARIABLE_FAMILY,
    init_state,
    initial_y_beta,
    step_gradient_descent,
    step_single_variable,
    step_two_sequence,
)

logger = logging.getLogger(__name__)


def run(config: MethodConfig, obj: Objective, x0) -> Trajectory:
    """
    Iterate until max_iter steps or ‖∇f(x_k)‖ ≤ grad_tol (when grad_tol > 0).

    Args:
        config: Method parameters and variant
        obj: Objective to minimize
        x0: Starting point

    Returns:
        Trajectory with iterates x_0..x_K and the derived series

    Raises:
        DimensionError: x0 does not match the objective
        DivergenceError: A non-finite iterate appeared at step k
    """
    x0 = obj.check_point(x0, "x0").copy()
    g0 = obj.gradient(x0)

    iterates = [x0]
    grads = [g0]

    def stop(g: np.ndarray) -> bool:
        return config.grad_tol > 0.0 and float(np.linalg.norm(g)) <= config.grad_tol

    def push(k: int, x: np.ndarray) -> np.ndarray:
        if not np.all(np.isfinite(x)):
            raise DivergenceError(
                k, f"Non-finite iterate at k={k} (beta={config.beta}, s={config.step})"
            )
        g = obj.gradient(x)
        if not np.all(np.isfinite(g)):
            raise DivergenceError(
                k, f"Non-finite gradient at k={k} (beta={config.beta}, s={config.step})"
            )
        iterates.append(x)
        grads.append(g)
        return g

    with np.errstate(over="ignore", invalid="ignore"):
        if not stop(g0):
            if config.variant == Variant.TWO_SEQUENCE:
                y_beta = initial_y_beta(config, obj, x0)
                for k in range(1, config.max_iter + 1):
                    x_next, y_beta = step_two_sequence(config, obj, iterates[-1], y_beta, grads[-1])
                    if stop(push(k, x_next)):
                        break
            elif config.variant == Variant.GRADIENT_DESCENT:
                for k in range(1, config.max_iter + 1):
                    x_next = step_gradient_descent(config, obj, iterates[-1], grads[-1])
                    if stop(push(k, x_next)):
                        break
            elif config.variant in SINGLE_VARIABLE_FAMILY:
                _, x1 = init_state(config, obj, x0)
                if not stop(push(1, x1)):
                    for k in range(2, config.max_iter + 1):
                        x_next = step_single_variable(
                            config, obj, iterates[-2], iterates[-1], grads[-2], grads[-1]
                        )
                        if stop(push(k, x_next)):
                            break

    return _record(config, obj, np.array(iterates))


def _record(config: MethodConfig, obj: Objective, iterates: np.ndarray) -> Trajectory:
    velocities = (iterates[1:] - iterates[:-1]) / math.sqrt(config.step)
    gaps = np.array([obj.gap(x) for x in iterates])
    grad_norms = np.array([float(np.linalg.norm(obj.gradient(x))) for x in iterates])

    logger.debug(
        f"{config.variant.value} beta={config.beta} s={config.step}: "
        f"{len(iterates) - 1} steps, final gap {gaps[-1]:.3e}"
    )
    return Trajectory(
        iterates=iterates,
        velocities=velocities,
        gaps=gaps,
        grad_norms=grad_norms,
        config=config,
    )


def observed_contraction(gaps, window: int = 100) -> float:
    """
    Per-iteration contraction factor fitted to the tail of a gap series.

    Fits log(gap_k) = a - k·log(q) by least squares over the last `window`
    steps and returns q; q > 1 means the gaps shrink. Zero gaps (exact
    convergence) are left out of the fit.
    """
    gaps = np.asarray(gaps, dtype=np.float64)
    start = max(len(gaps) - window - 1, 0)
    k = np.arange(start, len(gaps))
    tail = gaps[start:]
    positive = tail > 0
    if np.count_nonzero(positive) < 2:
        return math.inf
    slope, _ = np.polyfit(k[positive], np.log(tail[positive]), 1)
    return float(math.exp(-slope))
