"""
Discrete energy functional and the per-step decrement inequalities.

    E_β(k) = ((1+r)/(1-r))(f(x_k) - f*) + ¼‖v_k‖²
             + ¼‖v_k + (2√μ/(1-r))(x_k - x*) + β√s∇f(x_k)‖² - βs‖∇f(x_k)‖²/(2(1-r))

with r = √(μs) and v_k = (x_{k+1} - x_k)/√s.
"""

import logging
import math

import numpy as np

from ..core.errors import ConfigurationError, ParameterDomainError
from ..core.models import EnergySeries, Trajectory
from ..objectives.base import Objective
from ..phase.coefficients import SUPERCRITICAL_THRESHOLD, coefficients_AB
from ..phase.rates import initial_energy_constant

logger = logging.getLogger(__name__)

DECREMENT_RTOL = 1e-12


def _r(mu: float, s: float) -> float:
    if mu * s >= 1.0:
        raise ParameterDomainError(f"Discrete energy needs μs < 1, got μs = {mu * s}")
    return math.sqrt(mu * s)


def discrete_energy(
    beta: float, s: float, obj: Objective, x_k: np.ndarray, v_k: np.ndarray
) -> float:
    """
    E_β at (x_k, v_k). May be negative for β > 0; no sign is implied.

    Raises:
        ParameterDomainError: μs ≥ 1
    """
    r = _r(obj.mu, s)
    g = obj.gradient(x_k)
    gg = float(g @ g)
    pull = (2.0 * math.sqrt(obj.mu) / (1.0 - r)) * (x_k - obj.minimizer)
    mixed = v_k + pull + beta * math.sqrt(s) * g
    return (
        ((1.0 + r) / (1.0 - r)) * obj.gap(x_k)
        + 0.25 * float(v_k @ v_k)
        + 0.25 * float(mixed @ mixed)
        - beta * s * gg / (2.0 * (1.0 - r))
    )


def energy_sequence(traj: Trajectory, obj: Objective, beta: float, s: float) -> np.ndarray:
    """E_β(k) for k = 0..K-1, using the stored velocities."""
    return np.array(
        [discrete_energy(beta, s, obj, x, v) for x, v in zip(traj.iterates[:-1], traj.velocities)]
    )


def smoothness_form_rhs(
    beta: float, s: float, obj: Objective, x: np.ndarray, v: np.ndarray
) -> float:
    """
    Right-hand side of the decrement estimate valid for s ≤ 1/L, at (x_{k+1}, v_{k+1}):

        -(r/(1-r))(((1+r)/(1-r))⟨∇f, x - x*⟩ + ‖v‖²)
            + ½((1+r)/(1-r))·s·((1+β)r + 1 - β)/(1-r)·‖∇f‖²
    """
    r = _r(obj.mu, s)
    g = obj.gradient(x)
    q = (1.0 + r) / (1.0 - r)
    return (
        -(r / (1.0 - r)) * (q * float(g @ (x - obj.minimizer)) + float(v @ v))
        + 0.5 * q * s * ((1.0 + beta) * r + 1.0 - beta) / (1.0 - r) * float(g @ g)
    )


def three_term_rhs(beta: float, s: float, obj: Objective, x: np.ndarray, v: np.ndarray) -> float:
    """
    Right-hand side of the decrement estimate valid for s ≤ 1/(2L), at (x_{k+1}, v_{k+1}):

        -r·A_β·gap - r·(r/(1-r)²)[gap - ((β²s·r - (β²-β)s)/(2r))‖∇f‖²]
            - r[μ‖x - x*‖²/(2(1-r)²) + ‖v‖²/(1-r)]
    """
    r = _r(obj.mu, s)
    A, _ = coefficients_AB(beta, s, obj.mu, obj.lip)
    g = obj.gradient(x)
    gap = obj.gap(x)
    d = x - obj.minimizer
    corr = (beta**2 * s * r - (beta**2 - beta) * s) / (2.0 * r)
    return (
        -r * A * gap
        - r * (r / (1.0 - r) ** 2) * (gap - corr * float(g @ g))
        - r * (obj.mu * float(d @ d) / (2.0 * (1.0 - r) ** 2) + float(v @ v) / (1.0 - r))
    )


def check_discrete_decrement(
    traj: Trajectory, beta: float, s: float, obj: Objective
) -> EnergySeries:
    """
    Check E_β(k+1) - E_β(k) ≤ -r·min{1/6, A_β/B_β}·E_β(k+1) at every step.

    A step is flagged when the decrement exceeds the right-hand side by
    more than 1e-12(1 + |E_β(k+1)|). The check is binding for s ≤ 1/(4L).
    extras records the two weaker estimates (binding for s ≤ 1/L and
    s ≤ 1/(2L)), the geometric envelope E_β(0)/(1 + r·m)^k and the
    initial-energy bound E_β(0) ≤ C_β·L·‖x_0 - x*‖².

    All arrays have one entry per energy E_β(0..K-1); the last entry has
    no step, so its decrement and rhs are NaN and it is never violated.
    A run that stopped at x_0 gives empty arrays.

    Raises:
        ConfigurationError: (β, s) differ from the trajectory's config
        ParameterDomainError: μs ≥ 1
    """
    cfg = traj.config
    if not (
        math.isclose(cfg.effective_beta, beta, rel_tol=1e-12, abs_tol=1e-15)
        and math.isclose(cfg.step, s, rel_tol=1e-12)
    ):
        raise ConfigurationError(
            f"Trajectory ran with beta={cfg.effective_beta}, s={cfg.step}; "
            f"check asked for beta={beta}, s={s}"
        )

    r = _r(obj.mu, s)
    lip = obj.lip
    A, B = coefficients_AB(beta, s, obj.mu, lip)
    m = min(SUPERCRITICAL_THRESHOLD, A / B)

    values = energy_sequence(traj, obj, beta, s)
    n = len(values)
    nxt = values[1:]
    step_decrements = nxt - values[:-1]
    step_rhs = -r * m * nxt
    tol = DECREMENT_RTOL * (1.0 + np.abs(nxt))
    step_violated = step_decrements > step_rhs + tol

    # Row k holds E(k) and the step k -> k+1; the last energy has no step.
    decrements = np.full(n, np.nan)
    decrements[: n - 1] = step_decrements
    rhs = np.full(n, np.nan)
    rhs[: n - 1] = step_rhs
    violated = np.zeros(n, dtype=bool)
    violated[: n - 1] = step_violated

    xs, vs = traj.iterates[1:-1], traj.velocities[1:]
    smooth_rhs = np.array([smoothness_form_rhs(beta, s, obj, x, v) for x, v in zip(xs, vs)])
    three_rhs = np.array([three_term_rhs(beta, s, obj, x, v) for x, v in zip(xs, vs)])

    initial_value = float(values[0]) if n else 0.0
    factor = 1.0 + r * m
    k = np.arange(n)
    if factor > 0:
        envelope = initial_value / factor**k
        slack = DECREMENT_RTOL * (1.0 + abs(initial_value)) * (k + 1)
        envelope_violations = int(np.sum(values > envelope + slack))
    else:
        envelope = np.full(n, np.inf)
        envelope_violations = 0

    r2 = float(np.sum((traj.iterates[0] - obj.minimizer) ** 2))
    initial_bound = initial_energy_constant(beta, s, obj.mu, lip) * lip * r2

    binding = s <= (1.0 / (4.0 * lip)) * (1 + 1e-12)
    if not binding:
        logger.warning(f"s={s} > 1/(4L)={1.0 / (4.0 * lip)}: discrete decrement check is advisory")
    if n < 2:
        logger.info(
            f"Trajectory has {traj.num_steps} steps: no decrement to check (beta={beta}, s={s})"
        )
    if np.any(violated):
        logger.warning(
            f"Discrete decrement violated at {int(np.sum(violated))} steps (beta={beta}, s={s})"
        )

    return EnergySeries(
        index=k,
        values=values,
        decrements=decrements,
        bound_rhs=rhs,
        violated=violated,
        binding=binding,
        note="" if binding else f"s={s} > 1/(4L): advisory",
        extras={
            "rate": r * m,
            "ratio": A / B,
            "envelope": envelope,
            "envelope_violations": envelope_violations,
            "initial_energy": initial_value,
            "initial_bound": initial_bound,
            "initial_bound_holds": (
                initial_value <= initial_bound * (1 + DECREMENT_RTOL) + DECREMENT_RTOL
            ),
            "smoothness_form_violations": int(np.sum(step_decrements > smooth_rhs + tol)),
            "smoothness_form_binding": s <= 1.0 / lip,
            "three_term_violations": int(np.sum(step_decrements > three_rhs + tol)),
            "three_term_binding": s <= 1.0 / (2.0 * lip),
        },
    )
