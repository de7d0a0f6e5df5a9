"""
Regularized log-sum-exp objectives.

f(x) = log Σ exp(aᵢᵀx - bᵢ) + (μ/2)‖x‖², a member of S²_{μ,L} whose Hessian
varies with x, so Hessian-dependent terms are exercised.
"""

import logging

import numpy as np
from scipy.optimize import minimize
from scipy.special import logsumexp, softmax

from ..core.errors import InvalidObjectiveError, ObjectiveConstructionError
from .base import Objective

logger = logging.getLogger(__name__)

MINIMIZER_TOL = 1e-12
MAX_NEWTON_STEPS = 50


def make_smooth_nonquadratic(
    dimension: int, mu: float, seed: int, smoothness: float = 1.0, rows: int = 0
) -> Objective:
    """
    Build a deterministic regularized log-sum-exp objective.

    Rows are drawn from `seed` and scaled so ‖A‖₂² = smoothness. The
    log-sum-exp Hessian is Aᵀ(diag(p) - ppᵀ)A with ‖diag(p) - ppᵀ‖ ≤ ½, so
    its gradient-Lipschitz constant stays below smoothness and lip =
    smoothness + mu is a valid L.

    Args:
        dimension: Length of x
        mu: Strong-convexity modulus (the regularization weight)
        seed: Seed for rows and offsets
        smoothness: Bound on the log-sum-exp part's gradient-Lipschitz constant
        rows: Number of terms, 2·dimension + 1 when 0

    Raises:
        InvalidObjectiveError: mu, smoothness or dimension out of range
        ObjectiveConstructionError: Minimizer solve misses ‖∇f‖ ≤ 1e-12
    """
    if dimension < 1:
        raise InvalidObjectiveError(f"dimension must be >= 1, got {dimension}")
    if not mu > 0:
        raise InvalidObjectiveError(f"mu must be positive, got {mu}")
    if not smoothness > 0:
        raise InvalidObjectiveError(f"smoothness must be positive, got {smoothness}")

    m = rows or 2 * dimension + 1
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((m, dimension))
    A *= np.sqrt(smoothness) / np.linalg.norm(A, 2)
    b = rng.standard_normal(m)
    A.setflags(write=False)
    b.setflags(write=False)
    mu = float(mu)

    def value(x: np.ndarray) -> float:
        return float(logsumexp(A @ x - b)) + 0.5 * mu * float(x @ x)

    def gradient(x: np.ndarray) -> np.ndarray:
        return A.T @ softmax(A @ x - b) + mu * x

    def hvp(x: np.ndarray, v: np.ndarray) -> np.ndarray:
        p = softmax(A @ x - b)
        Av = A @ v
        return A.T @ (p * Av - p * (p @ Av)) + mu * v

    def hessian(x: np.ndarray) -> np.ndarray:
        p = softmax(A @ x - b)
        return A.T @ (np.diag(p) - np.outer(p, p)) @ A + mu * np.eye(dimension)

    x_star = _solve_minimizer(value, gradient, hvp, hessian, dimension)
    x_star.setflags(write=False)

    # Third directional derivatives of log-sum-exp are bounded by 2‖Au‖∞³.
    hess_lip = 2.0 * smoothness**1.5

    logger.debug(
        f"Log-sum-exp objective: n={dimension}, m={m}, mu={mu}, "
        f"L={smoothness + mu}, ‖∇f(x*)‖={np.linalg.norm(gradient(x_star)):.3e}"
    )

    return Objective(
        dimension=dimension,
        value=value,
        gradient=gradient,
        hvp=hvp,
        mu=mu,
        lip=float(smoothness) + mu,
        minimizer=x_star,
        min_value=value(x_star),
        hess_lip=hess_lip,
        name=f"logsumexp(n={dimension}, mu={mu}, seed={seed})",
    )


def _solve_minimizer(value, gradient, hvp, hessian, dimension: int) -> np.ndarray:
    """Trust-region pre-solve, then Newton steps until ‖∇f‖ ≤ MINIMIZER_TOL."""
    result = minimize(
        value,
        np.zeros(dimension),
        jac=gradient,
        hessp=hvp,
        method="trust-ncg",
        options={"gtol": 1e-10, "maxiter": 500},
    )
    x = np.asarray(result.x, dtype=np.float64)

    best = x.copy()
    best_norm = float(np.linalg.norm(gradient(x)))
    for _ in range(MAX_NEWTON_STEPS):
        if best_norm <= MINIMIZER_TOL:
            break
        g = gradient(x)
        x = x - np.linalg.solve(hessian(x), g)
        norm = float(np.linalg.norm(gradient(x)))
        if norm < best_norm:
            best, best_norm = x.copy(), norm
        else:
            # stalled at rounding level
            break

    if not best_norm <= MINIMIZER_TOL:
        raise ObjectiveConstructionError(
            f"Minimizer solve reached ‖∇f‖ = {best_norm:.3e}, needed {MINIMIZER_TOL:.0e}"
        )
    return best
