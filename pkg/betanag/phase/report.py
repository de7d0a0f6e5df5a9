"""
PhaseReport assembly and phase-diagram sweeps.
"""

import logging
import math
from typing import Iterable, List, Optional

from tqdm import tqdm

from ..core.errors import NoRealRootError, UniformRegimeError
from ..core.models import PhaseReport
from .coefficients import classify_regime, coefficients_AB, h_poly, step_window
from .critical import beta_critical_bisection, beta_critical_closed, quadratic_roots
from .rates import rate_factor

logger = logging.getLogger(__name__)


def analyze(beta: float, s: float, mu: float, lip: float, tol: float = 1e-10) -> PhaseReport:
    """
    Everything the phase analysis knows about one (β, μ, L, s).

    A missing critical β (no sign change of h on [0, 1], or no real root)
    is reported as beta_c_* = None with uniform = True.
    """
    window = step_window(mu, lip)
    A, B = coefficients_AB(beta, s, mu, lip)
    ratio = A / B
    h0, h1 = h_poly(0.0, s, mu, lip), h_poly(1.0, s, mu, lip)

    beta_c_closed: Optional[float] = None
    beta_c_bisect: Optional[float] = None
    roots: tuple = ()
    uniform = False
    try:
        roots = quadratic_roots(s, mu, lip)
        beta_c_closed = beta_critical_closed(s, mu, lip)
        beta_c_bisect = beta_critical_bisection(s, mu, lip, tol=tol)
    except (UniformRegimeError, NoRealRootError) as e:
        uniform = True
        logger.debug(f"No critical beta at s={s}, mu={mu}, L={lip}: {e}")

    return PhaseReport(
        mu=mu,
        lip=lip,
        step=s,
        beta=beta,
        window=window,
        A=A,
        B=B,
        ratio=ratio,
        h_value=h_poly(beta, s, mu, lip),
        beta_c_closed=beta_c_closed,
        beta_c_bisect=beta_c_bisect,
        regime=classify_regime(ratio),
        rate_factor=rate_factor(beta, s, mu, lip),
        in_window=window.contains(s),
        uniform=uniform,
        roots=roots,
        h0=h0,
        h1=h1,
    )


def sweep_phase(
    mu_over_l: Iterable[float],
    c_values: Iterable[float],
    betas: Iterable[float],
    progress: bool = False,
) -> List[PhaseReport]:
    """
    One report per (μ/L, c, β) cell with L = 1, μ = μ/L and s = 1/c.

    Cells with μs ≥ 1 have no finite coefficients and are skipped with a
    warning.
    """
    cells = [(q, c, b) for q in mu_over_l for c in c_values for b in betas]
    reports = []
    for q, c, b in tqdm(cells, desc="phase sweep", disable=not progress, leave=False):
        s = 1.0 / c
        if q * s >= 1.0:
            logger.warning(f"Skipping cell mu/L={q}, c={c}: μs = {q * s} ≥ 1")
            continue
        reports.append(analyze(float(b), s, float(q), 1.0))
    return reports


def regime_flips(reports: List[PhaseReport]) -> List[float]:
    """
    β values where the regime changes between β-neighbours of one (μ/L, c) row.

    Reports may come in any order; they are compared in ascending β.
    """
    ordered = sorted(reports, key=lambda r: (r.mu / r.lip, r.step * r.lip, r.beta))
    flips = []
    for prev, curr in zip(ordered, ordered[1:]):
        same_row = math.isclose(prev.mu, curr.mu) and math.isclose(prev.step, curr.step)
        if same_row and prev.regime != curr.regime:
            flips.append(curr.beta)
    return flips
