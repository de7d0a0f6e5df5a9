"""
Objective type shared by every numerical module.

An Objective bundles the oracles of a μ-strongly convex, L-smooth function
with its analytically known constants and minimizer.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..core.errors import CapabilityError, DimensionError

ValueOracle = Callable[[np.ndarray], float]
GradientOracle = Callable[[np.ndarray], np.ndarray]
HvpOracle = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Objective:
    """
    Certified test function.

    Attributes:
        dimension: Length of the argument vector
        value: x -> f(x)
        gradient: x -> ∇f(x)
        hvp: (x, v) -> ∇²f(x)v, None when no Hessian oracle is available
        mu: Strong-convexity modulus
        lip: Gradient Lipschitz constant L
        minimizer: x*
        min_value: f(x*)
        hess_lip: Hessian Lipschitz constant L', if known
        name: Short label used in artifact metadata
    """

    dimension: int
    value: ValueOracle
    gradient: GradientOracle
    hvp: Optional[HvpOracle]
    mu: float
    lip: float
    minimizer: np.ndarray
    min_value: float
    hess_lip: Optional[float] = None
    name: str = "objective"

    @property
    def has_hvp(self) -> bool:
        return self.hvp is not None

    def check_point(self, x, label: str = "x") -> np.ndarray:
        """Return x as a float64 vector, raising DimensionError on a shape mismatch."""
        arr = np.asarray(x, dtype=np.float64)
        if arr.ndim != 1 or arr.shape[0] != self.dimension:
            raise DimensionError(
                f"{label} has shape {arr.shape}, expected ({self.dimension},) for {self.name}"
            )
        return arr

    def gap(self, x: np.ndarray) -> float:
        """f(x) - f(x*), clipped at zero against rounding below the minimum."""
        return max(float(self.value(x)) - self.min_value, 0.0)

    def hessian_vector(self, x: np.ndarray, v: np.ndarray, fallback: bool = False) -> np.ndarray:
        """
        ∇²f(x)v from the oracle, or from a central difference of ∇f when
        fallback is enabled and no oracle exists.

        Raises:
            CapabilityError: No oracle and fallback disabled
        """
        if self.hvp is not None:
            return self.hvp(x, v)
        if not fallback:
            raise CapabilityError(
                f"{self.name} has no Hessian-vector oracle; enable the finite-difference fallback"
            )
        return finite_difference_hvp(self.gradient, x, v)

    def hessian(self, x: np.ndarray, fallback: bool = False) -> np.ndarray:
        """Dense Hessian assembled column by column; meant for small dimensions."""
        x = self.check_point(x)
        eye = np.eye(self.dimension)
        columns = [self.hessian_vector(x, eye[i], fallback=fallback) for i in range(self.dimension)]
        H = np.column_stack(columns)
        return 0.5 * (H + H.T)


def finite_difference_hvp(gradient: GradientOracle, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """(∇f(x+εv) - ∇f(x-εv)) / (2ε) with ε = 1e-6 (1+‖x‖)/(1+‖v‖)."""
    eps = 1e-6 * (1.0 + np.linalg.norm(x)) / (1.0 + np.linalg.norm(v))
    return (gradient(x + eps * v) - gradient(x - eps * v)) / (2.0 * eps)
