"""
Sampling-based certification of class membership.

Counts violations of strong convexity, L-smoothness, the gradient/gap
consequences of L-smoothness and (when L' is known) Hessian Lipschitz
continuity over random pairs in a ball around x*.
"""

import logging

import numpy as np

from ..core.errors import ParameterDomainError
from ..core.models import CertificationReport
from .base import Objective

logger = logging.getLogger(__name__)

EXACT_SLACK = 64 * np.finfo(np.float64).eps
SMOOTH_SLACK = 1e-12
# Dense Hessians are assembled only up to this dimension.
MAX_HESSIAN_DIMENSION = 64


def relative_slack(obj: Objective) -> float:
    """Rounding-only slack for constant-Hessian objectives, 1e-12 otherwise."""
    return EXACT_SLACK if obj.hess_lip == 0.0 else SMOOTH_SLACK


def sample_ball(
    rng: np.random.Generator, center: np.ndarray, radius: float, count: int
) -> np.ndarray:
    """Uniform samples from the ball of given radius, one per row."""
    n = center.shape[0]
    directions = rng.standard_normal((count, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = radius * rng.random(count) ** (1.0 / n)
    return center + directions * radii[:, None]


def certify(
    obj: Objective, samples: int = 1000, radius: float = 1.0, rng_seed: int = 0
) -> CertificationReport:
    """
    Check the defining inequalities of S^p_{μ,L} on sampled pairs.

    Args:
        obj: Objective to certify
        samples: Number of (x, y) pairs
        radius: Sampling radius around x*
        rng_seed: Seed of the sampler

    Returns:
        CertificationReport; worst_margins holds the largest violation
        amount per inequality (negative when all held)
    """
    if samples < 1:
        raise ParameterDomainError(f"samples must be >= 1, got {samples}")
    if not radius > 0:
        raise ParameterDomainError(f"radius must be positive, got {radius}")

    rng = np.random.default_rng(rng_seed)
    xs = sample_ball(rng, obj.minimizer, radius, samples)
    ys = sample_ball(rng, obj.minimizer, radius, samples)
    rel = relative_slack(obj)
    mu, lip = obj.mu, obj.lip
    f_star = obj.min_value

    check_hessian = (
        obj.hess_lip is not None and obj.has_hvp and obj.dimension <= MAX_HESSIAN_DIMENSION
    )

    counts = {"strong_convexity": 0, "smoothness": 0, "gradient_gap": 0, "hessian_lipschitz": 0}
    worst = {key: -np.inf for key in counts}

    def record(key: str, excess: float, tol: float) -> None:
        worst[key] = max(worst[key], excess)
        if excess > tol:
            counts[key] += 1

    for x, y in zip(xs, ys):
        fx, fy = float(obj.value(x)), float(obj.value(y))
        gx, gy = obj.gradient(x), obj.gradient(y)
        d = y - x
        dist = float(np.linalg.norm(d))
        inner = float(gx @ d)

        scale = 1.0 + abs(fx) + abs(fy) + abs(inner)
        record("strong_convexity", fx + inner + 0.5 * mu * dist**2 - fy, rel * scale)

        gscale = 1.0 + np.linalg.norm(gx) + np.linalg.norm(gy)
        record("smoothness", float(np.linalg.norm(gx - gy)) - lip * dist, rel * gscale)

        gap = fx - f_star
        to_star = float(np.linalg.norm(x - obj.minimizer))
        gnorm = float(np.linalg.norm(gx))
        fscale = 1.0 + abs(fx) + abs(f_star)
        record("gradient_gap", gnorm**2 - 2.0 * lip * gap, rel * fscale * (1.0 + lip))
        record("gradient_gap", gap - 0.5 * lip * to_star**2, rel * fscale)
        record("gradient_gap", gnorm - lip * to_star, rel * gscale)

        if check_hessian:
            diff = obj.hessian(x) - obj.hessian(y)
            hscale = 1.0 + lip
            excess = float(np.linalg.norm(diff, 2)) - obj.hess_lip * dist
            record("hessian_lipschitz", excess, rel * hscale)

    report = CertificationReport(
        samples=samples,
        radius=radius,
        strong_convexity_violations=counts["strong_convexity"],
        smoothness_violations=counts["smoothness"],
        gradient_gap_violations=counts["gradient_gap"],
        hessian_lipschitz_violations=counts["hessian_lipschitz"] if check_hessian else None,
        worst_margins={k: float(v) for k, v in worst.items() if np.isfinite(v)},
    )

    if report.passed:
        logger.debug(f"Certified {obj.name} on {samples} pairs (radius {radius})")
    else:
        logger.warning(f"{obj.name} failed certification: {report.total_violations} violations")
    return report
