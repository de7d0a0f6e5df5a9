"""
A_β, B_β, h(β) and the step-size window of the discrete analysis.

Everything is evaluated in the (r, Ls) parameterization with r = √(μs):

    A_β = [1 - Ls·X_β/r] / (1-r)²,  X_β = (β-β²)r² + (3+β²-2β)r + 2 - 2β
    B_β = 1/(1-r) + β²Ls/2
    h(β) = aβ² + bβ + c,  with A_β/B_β - 1/6 = h(β)/D_β and D_β > 0
"""

import math
from typing import Tuple

from ..core.errors import ParameterDomainError
from ..core.models import Regime, StepWindow

BOUNDARY_TOL = 1e-12
SUPERCRITICAL_THRESHOLD = 1.0 / 6.0


def _check(beta: float, s: float, mu: float, lip: float) -> Tuple[float, float]:
    """Validate and return (r, Ls)."""
    if not 0.0 <= beta <= 1.0:
        raise ParameterDomainError(f"beta must lie in [0, 1], got {beta}")
    return _check_step(s, mu, lip)


def _check_step(s: float, mu: float, lip: float) -> Tuple[float, float]:
    if not s > 0:
        raise ParameterDomainError(f"s must be positive, got {s}")
    if not (mu > 0 and lip > 0):
        raise ParameterDomainError(f"mu and L must be positive, got mu={mu}, L={lip}")
    if mu * s >= 1.0:
        raise ParameterDomainError(f"Needs μs < 1, got μs = {mu * s}")
    return math.sqrt(mu * s), lip * s


def step_window(mu: float, lip: float) -> StepWindow:
    """
    s ∈ [25μ/(12L-μ)², 1/(4L)], equivalently c = 1/(sL) ∈ [4, (12L-μ)²/(25μL)].

    Raises:
        ParameterDomainError: mu > lip or a nonpositive constant
    """
    if not (mu > 0 and lip > 0):
        raise ParameterDomainError(f"mu and L must be positive, got mu={mu}, L={lip}")
    if mu > lip:
        raise ParameterDomainError(f"Needs mu ≤ L, got mu={mu}, L={lip}")
    s_min = 25.0 * mu / (12.0 * lip - mu) ** 2
    s_max = 1.0 / (4.0 * lip)
    c_max = (12.0 * lip - mu) ** 2 / (25.0 * mu * lip)
    return StepWindow(s_min=s_min, s_max=s_max, c_min=4.0, c_max=c_max)


def coefficients_AB(beta: float, s: float, mu: float, lip: float) -> Tuple[float, float]:
    """(A_β, B_β) of the recursive energy inequality."""
    r, Ls = _check(beta, s, mu, lip)
    X = (beta - beta**2) * r**2 + (3.0 + beta**2 - 2.0 * beta) * r + 2.0 - 2.0 * beta
    A = (1.0 - Ls * X / r) / (1.0 - r) ** 2
    B = 1.0 / (1.0 - r) + beta**2 * Ls / 2.0
    return A, B


def ratio_AB(beta: float, s: float, mu: float, lip: float) -> float:
    A, B = coefficients_AB(beta, s, mu, lip)
    return A / B


def h_coefficients(s: float, mu: float, lip: float) -> Tuple[float, float, float]:
    """(a, b, c) with h(β) = aβ² + bβ + c."""
    r, Ls = _check_step(s, mu, lip)
    a = Ls * r * (r - 1.0) * (1.0 - (r - 1.0) / 12.0)
    b = Ls * (2.0 * r - r**2 + 2.0)
    c = (5.0 / 6.0) * r - 3.0 * Ls * r - 2.0 * Ls + r**2 / 6.0
    return a, b, c


def h_poly(beta: float, s: float, mu: float, lip: float) -> float:
    """
    h(β) in the expanded form

        (Lμs² - Ls·r)β² + (2Ls·r - Lμs² + 2Ls)β + (r - 3Ls·r - 2Ls)
            - (1/6)[(Ls/2)·r(1-r)²β² + r - μs]
    """
    r, Ls = _check(beta, s, mu, lip)
    lmus2 = Ls * r**2
    main = (
        (lmus2 - Ls * r) * beta**2
        + (2.0 * Ls * r - lmus2 + 2.0 * Ls) * beta
        + (r - 3.0 * Ls * r - 2.0 * Ls)
    )
    return main - ((Ls / 2.0) * r * (1.0 - r) ** 2 * beta**2 + r - r**2) / 6.0


def h_derivative(beta: float, s: float, mu: float, lip: float) -> float:
    """h'(β) = 2aβ + b."""
    _check(beta, s, mu, lip)
    a, b, _ = h_coefficients(s, mu, lip)
    return 2.0 * a * beta + b


def h_denominator(beta: float, s: float, mu: float, lip: float) -> float:
    """D_β = r[(1-r) + (Ls/2)(1-r)²β²], positive whenever μs < 1."""
    r, Ls = _check(beta, s, mu, lip)
    return r * ((1.0 - r) + (Ls / 2.0) * (1.0 - r) ** 2 * beta**2)


def classify_regime(ratio: float, tol: float = BOUNDARY_TOL) -> Regime:
    """Supercritical when A_β/B_β > 1/6, boundary within tol of it."""
    if abs(ratio - SUPERCRITICAL_THRESHOLD) <= tol:
        return Regime.BOUNDARY
    return Regime.SUPERCRITICAL if ratio > SUPERCRITICAL_THRESHOLD else Regime.SUBCRITICAL


def contraction_rate(beta: float, s: float, mu: float, lip: float) -> float:
    """√(μs)·min{1/6, A_β/B_β}, the per-step energy decrement coefficient."""
    r, _ = _check(beta, s, mu, lip)
    return r * min(SUPERCRITICAL_THRESHOLD, ratio_AB(beta, s, mu, lip))
