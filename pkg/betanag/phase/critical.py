"""
Critical β: closed form and bisection oracle.
"""

import logging
import math
from typing import Tuple

from scipy.optimize import bisect

from ..core.errors import NoRealRootError, UniformRegimeError
from ..core.models import Regime
from .coefficients import h_coefficients, h_poly, step_window

logger = logging.getLogger(__name__)

ROOT_TOL = 1e-12


def quadratic_roots(s: float, mu: float, lip: float) -> Tuple[float, ...]:
    """
    Both real roots of h, in increasing order.

    Raises:
        NoRealRootError: Negative discriminant
    """
    a, b, c = h_coefficients(s, mu, lip)
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise NoRealRootError(f"h has no real root: discriminant {disc:.6g} < 0")
    sq = math.sqrt(disc)
    # Stable pair: q = -(b + sign(b)√disc)/2, roots q/a and c/q
    q = -0.5 * (b + math.copysign(sq, b))
    roots = []
    if q != 0.0:
        roots.append(c / q)
    if a != 0.0:
        roots.append(q / a)
    return tuple(sorted(roots))


def _uniform(s: float, mu: float, lip: float) -> UniformRegimeError:
    h0, h1 = h_poly(0.0, s, mu, lip), h_poly(1.0, s, mu, lip)
    regime = Regime.SUPERCRITICAL if h0 > 0 else Regime.SUBCRITICAL
    return UniformRegimeError(regime.value, h0, h1)


def beta_critical_closed(s: float, mu: float, lip: float) -> float:
    """
    Root of h in [0, 1] from the quadratic formula.

    Computed as 2c/(-b - √disc), which equals (-b + √disc)/(2a) for a ≠ 0
    and stays finite as a → 0.

    Raises:
        NoRealRootError: Negative discriminant
        UniformRegimeError: No root in [0, 1]
    """
    a, b, c = h_coefficients(s, mu, lip)
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise NoRealRootError(f"h has no real root: discriminant {disc:.6g} < 0")
    beta_c = 2.0 * c / (-b - math.sqrt(disc))
    if -ROOT_TOL <= beta_c <= 1.0 + ROOT_TOL:
        return min(max(beta_c, 0.0), 1.0)

    window = step_window(mu, lip)
    if not window.contains(s):
        logger.debug(f"s={s} lies outside the step window [{window.s_min:.6g}, {window.s_max:.6g}]")
    raise _uniform(s, mu, lip)


def beta_critical_bisection(s: float, mu: float, lip: float, tol: float = 1e-10) -> float:
    """
    Root of h on [0, 1] by bisection; h is nondecreasing there on the window.

    Raises:
        WindowEmptyError: The step window is empty
        UniformRegimeError: h(0) and h(1) share a sign
    """
    step_window(mu, lip).require()
    h0, h1 = h_poly(0.0, s, mu, lip), h_poly(1.0, s, mu, lip)
    if h0 == 0.0:
        return 0.0
    if h1 == 0.0:
        return 1.0
    if (h0 > 0) == (h1 > 0):
        raise _uniform(s, mu, lip)
    return float(bisect(h_poly, 0.0, 1.0, args=(s, mu, lip), xtol=tol))
