"""
Core data models for BetaNAG.

These models carry results between the numerical modules and the harness.
"""

import math
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .errors import ParameterDomainError, WindowEmptyError


class Variant(str, Enum):
    """Update rule driven by a MethodConfig."""

    SINGLE_VARIABLE = "single_variable"
    TWO_SEQUENCE = "two_sequence"
    HEAVY_BALL_REFERENCE = "heavy_ball_reference"
    NAG_SC_REFERENCE = "nag_sc_reference"
    GRADIENT_DESCENT = "gradient_descent"


class Regime(str, Enum):
    """Which decrement bound binds in the discrete analysis."""

    SUBCRITICAL = "subcritical"
    SUPERCRITICAL = "supercritical"
    BOUNDARY = "boundary"


@dataclass
class MethodConfig:
    """
    Parameters of one discrete run.

    heavy_ball_reference always behaves as beta=0 and nag_sc_reference as
    beta=1, whatever beta holds.
    """

    beta: float
    step: float
    max_iter: int = 1000
    grad_tol: float = 0.0
    variant: Variant = Variant.SINGLE_VARIABLE

    def __post_init__(self):
        self.variant = Variant(self.variant)
        self.beta = float(self.beta)
        self.step = float(self.step)
        self.grad_tol = float(self.grad_tol)
        if not 0.0 <= self.beta <= 1.0:
            raise ParameterDomainError(f"beta must lie in [0, 1], got {self.beta}")
        if not self.step > 0.0:
            raise ParameterDomainError(f"step must be positive, got {self.step}")
        if int(self.max_iter) < 1:
            raise ParameterDomainError(f"max_iter must be >= 1, got {self.max_iter}")
        self.max_iter = int(self.max_iter)
        if self.grad_tol < 0.0:
            raise ParameterDomainError(f"grad_tol must be nonnegative, got {self.grad_tol}")

    @property
    def effective_beta(self) -> float:
        """Gradient-correction weight the update rule actually applies."""
        if self.variant == Variant.HEAVY_BALL_REFERENCE:
            return 0.0
        if self.variant == Variant.NAG_SC_REFERENCE:
            return 1.0
        return self.beta

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "beta": self.beta,
            "step": self.step,
            "max_iter": self.max_iter,
            "grad_tol": self.grad_tol,
            "variant": self.variant.value,
        }


@dataclass
class Trajectory:
    """
    Recorded discrete run.

    iterates has K+1 rows x_0..x_K; velocities has K rows with
    v_k = (x_{k+1} - x_k) / sqrt(s) computed from the stored iterates.
    """

    iterates: np.ndarray
    velocities: np.ndarray
    gaps: np.ndarray
    grad_norms: np.ndarray
    config: MethodConfig

    @property
    def num_steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def final_gap(self) -> float:
        return float(self.gaps[-1])


@dataclass
class OdeSolution:
    """Fixed-step solution of a second-order ODE on a uniform grid."""

    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    beta: float
    step: float
    integrator_step: float
    resolution: str = "high"

    @property
    def t_end(self) -> float:
        return float(self.times[-1])


@dataclass
class EnergySeries:
    """
    Energy functional along a run with the decrement inequality checked.

    index holds iteration numbers (discrete) or times (continuous); all
    arrays share its length. A NaN decrement marks a point with no step
    after it (the last discrete energy).
    """

    index: np.ndarray
    values: np.ndarray
    decrements: np.ndarray
    bound_rhs: np.ndarray
    violated: np.ndarray
    binding: bool = True
    note: str = ""
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def violations(self) -> List[Any]:
        """Index values where the inequality fails beyond tolerance."""
        return [self.index[i].item() for i in np.flatnonzero(self.violated)]

    @property
    def worst_margin(self) -> float:
        """Largest decrement - rhs (negative means every step satisfied the bound)."""
        margins = self.decrements - self.bound_rhs
        margins = margins[~np.isnan(margins)]
        if len(margins) == 0:
            return 0.0
        return float(np.max(margins))


@dataclass
class StepWindow:
    """Step-size window of the discrete rate analysis and its c-range (s = 1/(cL))."""

    s_min: float
    s_max: float
    c_min: float
    c_max: float

    @property
    def empty(self) -> bool:
        return self.s_min > self.s_max

    def require(self) -> "StepWindow":
        """Return self, raising WindowEmptyError when s_min > s_max."""
        if self.empty:
            raise WindowEmptyError(f"Step window is empty: s_min={self.s_min} > s_max={self.s_max}")
        return self

    def contains(self, step: float, rtol: float = 1e-12) -> bool:
        """Closed-interval membership with a relative tolerance at the ends."""
        if self.empty:
            return False
        return self.s_min * (1 - rtol) <= step <= self.s_max * (1 + rtol)


@dataclass
class PhaseReport:
    """A_β, B_β, h(β), β_c and the regime for one (β, μ, L, s)."""

    mu: float
    lip: float
    step: float
    beta: float
    window: StepWindow
    A: float
    B: float
    ratio: float
    h_value: float
    beta_c_closed: Optional[float]
    beta_c_bisect: Optional[float]
    regime: Regime
    rate_factor: float
    in_window: bool
    uniform: bool = False
    roots: Tuple[float, ...] = ()
    h0: float = float("nan")
    h1: float = float("nan")

    @property
    def c(self) -> float:
        return 1.0 / (self.step * self.lip)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "mu": self.mu,
            "lip": self.lip,
            "step": self.step,
            "beta": self.beta,
            "window": [self.window.s_min, self.window.s_max],
            "A": self.A,
            "B": self.B,
            "ratio": self.ratio,
            "h": self.h_value,
            "beta_c_closed": self.beta_c_closed,
            "beta_c_bisect": self.beta_c_bisect,
            "regime": self.regime.value,
            "rate_factor": self.rate_factor,
            "in_window": self.in_window,
            "uniform": self.uniform,
            "roots": list(self.roots),
        }


@dataclass
class RateBound:
    """
    Discrete gap bound at iteration k and the quantities it is built from.

    vacuous: the rate factor is ≤ 0 and value is inf.
    contracting: the rate factor exceeds 1, so the bound decays with k.
    """

    value: float
    rate_factor: float
    expanded_rate_factor: float
    regime: Regime
    constant: float
    gap_factor: float
    in_window: bool
    vacuous: bool = False
    contracting: bool = False


@dataclass
class BoundReport:
    """Worst ratio of an observed quantity to its bound."""

    name: str
    worst_ratio: float
    passed: bool
    binding: bool
    constant: float
    note: str = ""


@dataclass
class CertificationReport:
    """Sampled class-membership violations of an objective."""

    samples: int
    radius: float
    strong_convexity_violations: int
    smoothness_violations: int
    gradient_gap_violations: int
    hessian_lipschitz_violations: Optional[int] = None
    worst_margins: Dict[str, float] = field(default_factory=dict)

    @property
    def total_violations(self) -> int:
        total = (
            self.strong_convexity_violations
            + self.smoothness_violations
            + self.gradient_gap_violations
        )
        if self.hessian_lipschitz_violations is not None:
            total += self.hessian_lipschitz_violations
        return total

    @property
    def passed(self) -> bool:
        return self.total_violations == 0


@dataclass
class Cell:
    """
    One grid point of a check.

    Either a (β, s) pair, a β over a ladder of s (step = nan) or a labelled row.
    """

    beta: float
    step: float
    beta_label: str = ""
    label: str = ""

    @property
    def name(self) -> str:
        """File-name token: b0.5_s0.025, bbeta_c_s0.025, or b0.5 for a ladder cell."""
        if self.label:
            return self.label
        beta = self.beta_label or f"{self.beta:.6g}"
        if math.isnan(self.step):
            return f"b{beta}"
        return f"b{beta}_s{self.step:.6g}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "beta": self.beta,
            "step": self.step,
            "beta_label": self.beta_label,
        }


@dataclass
class CheckOutcome:
    """Pass/fail of one inequality on one experiment cell."""

    check: str
    cell: str
    inequality: str
    binding: bool
    passed: bool
    worst_margin: float = 0.0
    violations: int = 0
    artifacts: List[Path] = field(default_factory=list)
    note: str = ""

    @property
    def failed_binding(self) -> bool:
        return self.binding and not self.passed

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "check": self.check,
            "cell": self.cell,
            "inequality": self.inequality,
            "binding": self.binding,
            "passed": self.passed,
            "worst_margin": self.worst_margin,
            "violations": self.violations,
            "artifacts": [str(p) for p in self.artifacts],
            "note": self.note,
        }


@dataclass
class ExperimentSummary:
    """Everything a run produced, in the order it was produced."""

    output_dir: Path
    outcomes: List[CheckOutcome] = field(default_factory=list)
    cells: List[Dict[str, Any]] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)
    generated_at: datetime = field(default_factory=datetime.now)

    @property
    def binding_failures(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if o.failed_binding]

    @property
    def exit_code(self) -> int:
        return 1 if self.binding_failures else 0
