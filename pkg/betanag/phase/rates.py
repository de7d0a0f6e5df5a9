"""
Discrete rate bound for the family, in both regimes.

With s = 1/(cL) and r = √(μs) = √(μ/(cL)):

    E_β(k) ≤ E_β(0) / (1 + r·min{1/6, A_β/B_β})^k
    E_β(0) ≤ C_β·L·‖x_0 - x*‖²
    f(x_k) - f(x*) ≤ G_β·E_β(k)

so f(x_k) - f(x*) ≤ G_β·C_β·L·‖x_0 - x*‖² / rate_factor^k.
"""

import logging
import math

from ..core.errors import ParameterDomainError
from ..core.models import RateBound
from .coefficients import SUPERCRITICAL_THRESHOLD, _check, classify_regime, ratio_AB, step_window

logger = logging.getLogger(__name__)


def initial_energy_constant(beta: float, s: float, mu: float, lip: float) -> float:
    """
    C_β with E_β(0) ≤ C_β·L·‖x_0 - x*‖² for the initial velocity -2√s∇f(x_0)/(1+r):

        ½(1+r)/(1-r) + Ls/(1+r)² + (2μ/L)/(1-r)² + (Ls/2)((2-β-βr)/(1+r))²
    """
    r, Ls = _check(beta, s, mu, lip)
    return (
        0.5 * (1.0 + r) / (1.0 - r)
        + Ls / (1.0 + r) ** 2
        + (2.0 * mu / lip) / (1.0 - r) ** 2
        + (Ls / 2.0) * ((2.0 - beta - beta * r) / (1.0 + r)) ** 2
    )


def gap_energy_factor(beta: float, s: float, mu: float, lip: float) -> float:
    """
    G_β with f(x) - f(x*) ≤ G_β·E_β.

    E_β ≥ ((1+r)/(1-r))·gap - β‖∇f‖²/(2cL(1-r)) and ‖∇f‖² ≤ 2L·gap give
    G_β = c(1-r)/(c(1+r) - β).
    """
    r, Ls = _check(beta, s, mu, lip)
    c = 1.0 / Ls
    denominator = c * (1.0 + r) - beta
    if not denominator > 0:
        raise ParameterDomainError(f"c(1+r) - β must be positive, got {denominator}")
    return c * (1.0 - r) / denominator


def expanded_subcritical_fraction(beta: float, c: float, mu_over_l: float) -> float:
    """
    The subcritical rate fraction expanded in c and μ/L:

        [((β²-β)/c²)(μ/L) + (1/√c - (3+β²-2β)/(c√c))√(μ/L) - (2-2β)/c]
        / [(β²/(2c²√c))(μ/L)^{3/2} - (1/c + β²/c²)(μ/L) + (1/√c + β²/(2c√c))√(μ/L)]

    Algebraically equal to A_β/B_β.
    """
    q = mu_over_l
    sc = math.sqrt(c)
    sq = math.sqrt(q)
    numerator = (
        (beta**2 - beta) / c**2 * q
        + (1.0 / sc - (3.0 + beta**2 - 2.0 * beta) / (c * sc)) * sq
        - (2.0 - 2.0 * beta) / c
    )
    denominator = (
        beta**2 / (2.0 * c**2 * sc) * q**1.5
        - (1.0 / c + beta**2 / c**2) * q
        + (1.0 / sc + beta**2 / (2.0 * c * sc)) * sq
    )
    return numerator / denominator


def subcritical_rate_factor(beta: float, c: float, mu_over_l: float) -> float:
    """1 + √(μ/(cL))·(expanded fraction) = 1 + √(μs)·A_β/B_β."""
    return 1.0 + math.sqrt(mu_over_l / c) * expanded_subcritical_fraction(beta, c, mu_over_l)


def supercritical_rate_factor(c: float, mu_over_l: float) -> float:
    """1 + √(μ/L)/(6√c); at c = 4 this is 1 + √(μ/L)/12."""
    return 1.0 + math.sqrt(mu_over_l) / (6.0 * math.sqrt(c))


def rate_factor(beta: float, s: float, mu: float, lip: float) -> float:
    """1 + √(μs)·min{1/6, A_β/B_β}."""
    r, _ = _check(beta, s, mu, lip)
    return 1.0 + r * min(SUPERCRITICAL_THRESHOLD, ratio_AB(beta, s, mu, lip))


def rate_bound(beta: float, s: float, mu: float, lip: float, k: int, r2: float) -> RateBound:
    """
    Gap bound at iteration k given r2 = ‖x_0 - x*‖².

    Outside the step window the value is still computed and flagged
    through in_window. A nonpositive rate factor makes the bound vacuous
    (value = inf). A factor in (0, 1] still bounds the gap but does not
    contract it; contracting is False there.
    expanded_rate_factor is the same factor evaluated from the closed forms
    in c = 1/(Ls) and μ/L of the regime it falls in.
    """
    if k < 0:
        raise ParameterDomainError(f"k must be nonnegative, got {k}")
    r, Ls = _check(beta, s, mu, lip)
    ratio = ratio_AB(beta, s, mu, lip)
    regime = classify_regime(ratio)
    factor = 1.0 + r * min(SUPERCRITICAL_THRESHOLD, ratio)
    if ratio < SUPERCRITICAL_THRESHOLD:
        expanded = subcritical_rate_factor(beta, 1.0 / Ls, mu / lip)
    else:
        expanded = supercritical_rate_factor(1.0 / Ls, mu / lip)

    in_window = step_window(mu, lip).contains(s)
    constant = initial_energy_constant(beta, s, mu, lip)
    gap_factor = gap_energy_factor(beta, s, mu, lip)

    vacuous = not factor > 0
    if vacuous:
        value = math.inf
    else:
        value = gap_factor * constant * lip * r2 / factor**k

    return RateBound(
        value=value,
        rate_factor=factor,
        expanded_rate_factor=expanded,
        regime=regime,
        constant=constant,
        gap_factor=gap_factor,
        in_window=in_window,
        vacuous=vacuous,
        contracting=factor > 1.0,
    )
