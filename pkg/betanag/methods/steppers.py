"""
Update rules of the β-interpolated momentum family.

With r = √(μs) and α = (1-r)/(1+r) the single-variable rule is

    x_{k+1} = x_k + α(x_k - x_{k-1}) - s∇f(x_k) - β·α·s(∇f(x_k) - ∇f(x_{k-1}))

β = 0 gives heavy ball, β = 1 gives NAG-SC. The reference rules below use
the same arithmetic order, so the specializations agree bit for bit.
"""

import math
from typing import Optional, Tuple

import numpy as np

from ..core.errors import ParameterDomainError
from ..core.models import MethodConfig, Variant
from ..objectives.base import Objective

SINGLE_VARIABLE_FAMILY = (
    Variant.SINGLE_VARIABLE,
    Variant.HEAVY_BALL_REFERENCE,
    Variant.NAG_SC_REFERENCE,
)


def sqrt_mu_s(mu: float, s: float) -> float:
    """r = √(μs)."""
    return math.sqrt(mu * s)


def momentum(mu: float, s: float) -> float:
    """α = (1 - √(μs)) / (1 + √(μs))."""
    r = sqrt_mu_s(mu, s)
    return (1.0 - r) / (1.0 + r)


def init_state(config: MethodConfig, obj: Objective, x0) -> Tuple[np.ndarray, np.ndarray]:
    """
    Initial pair (x_0, x_1) with x_1 = x_0 - 2s∇f(x_0)/(1 + √(μs)).

    Gradient descent starts from x_1 = x_0 - s∇f(x_0).
    """
    x0 = obj.check_point(x0, "x0").copy()
    g0 = obj.gradient(x0)
    s = config.step
    if config.variant == Variant.GRADIENT_DESCENT:
        return x0, x0 - s * g0
    r = sqrt_mu_s(obj.mu, s)
    return x0, x0 - 2.0 * s * g0 / (1.0 + r)


def initial_velocity(obj: Objective, s: float, x0: np.ndarray) -> np.ndarray:
    """v_0 = -2√s∇f(x_0)/(1 + √(μs)), shared by the discrete and continuous models."""
    return -2.0 * math.sqrt(s) * obj.gradient(x0) / (1.0 + sqrt_mu_s(obj.mu, s))


def step_single_variable(
    config: MethodConfig,
    obj: Objective,
    x_prev: np.ndarray,
    x_curr: np.ndarray,
    g_prev: Optional[np.ndarray] = None,
    g_curr: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    One step of the single-variable rule (or of a reference rule).

    Gradients already evaluated by the caller may be passed in; the result
    does not depend on whether they are.
    """
    if config.variant not in SINGLE_VARIABLE_FAMILY:
        raise ParameterDomainError(
            f"step_single_variable does not drive variant {config.variant.value}"
        )

    if g_prev is None:
        g_prev = obj.gradient(x_prev)
    if g_curr is None:
        g_curr = obj.gradient(x_curr)

    s = config.step
    alpha = momentum(obj.mu, s)
    x, g = x_curr, g_curr

    if config.variant == Variant.HEAVY_BALL_REFERENCE:
        return x + alpha * (x - x_prev) - s * g
    if config.variant == Variant.NAG_SC_REFERENCE:
        return x + alpha * (x - x_prev) - s * g - alpha * s * (g - g_prev)

    beta = config.beta
    return x + alpha * (x - x_prev) - s * g - beta * alpha * s * (g - g_prev)


def initial_y_beta(config: MethodConfig, obj: Objective, x0) -> np.ndarray:
    """
    y_0^β = ((1-r)x_0 - s∇f(x_0)[(1-r)β + r - 1]) / (1-r).

    Raises:
        ParameterDomainError: μs ≥ 1
    """
    s, beta = config.step, config.effective_beta
    r = _two_sequence_r(obj.mu, s)
    x0 = obj.check_point(x0, "x0")
    g0 = obj.gradient(x0)
    return ((1.0 - r) * x0 - s * g0 * ((1.0 - r) * beta + r - 1.0)) / (1.0 - r)


def step_two_sequence(
    config: MethodConfig,
    obj: Objective,
    x_curr: np.ndarray,
    y_beta_curr: np.ndarray,
    g_curr: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    One step of the two-sequence form.

        y_{k+1}   = x_k - s∇f(x_k)
        y_{k+1}^β = x_k - βs∇f(x_k)
        x_{k+1}   = y_{k+1} + α(y_{k+1}^β - y_k^β)

    Raises:
        ParameterDomainError: μs ≥ 1
    """
    s, beta = config.step, config.effective_beta
    r = _two_sequence_r(obj.mu, s)
    alpha = (1.0 - r) / (1.0 + r)
    if g_curr is None:
        g_curr = obj.gradient(x_curr)

    y_next = x_curr - s * g_curr
    y_beta_next = x_curr - beta * s * g_curr
    x_next = y_next + alpha * (y_beta_next - y_beta_curr)
    return x_next, y_beta_next


def step_gradient_descent(
    config: MethodConfig, obj: Objective, x_curr: np.ndarray, g_curr=None
) -> np.ndarray:
    """x_{k+1} = x_k - s∇f(x_k)."""
    if g_curr is None:
        g_curr = obj.gradient(x_curr)
    return x_curr - config.step * g_curr


def _two_sequence_r(mu: float, s: float) -> float:
    if mu * s >= 1.0:
        raise ParameterDomainError(f"Two-sequence form needs μs < 1, got μs = {mu * s}")
    return sqrt_mu_s(mu, s)
