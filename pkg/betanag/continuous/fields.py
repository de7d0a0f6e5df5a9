"""
Phase-space vector fields of the high- and low-resolution ODEs.

    high:  Ẋ = V,  V̇ = -2√μ V - β√s ∇²f(X)V - (1 + √(μs))∇f(X)
    low:   Ẋ = V,  V̇ = -2√μ V - ∇f(X)
"""

import functools
import logging
import math
from typing import Tuple

import numpy as np

from ..objectives.base import Objective

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=32)
def warn_fallback(name: str) -> None:
    """Warn once per objective name; the cache keeps the most recent names."""
    logger.warning(f"{name}: using finite-difference Hessian-vector products")


def hr_rhs(
    beta: float, s: float, obj: Objective, X: np.ndarray, V: np.ndarray, fallback: bool = False
) -> Tuple[np.ndarray, np.ndarray]:
    """
    High-resolution field at (X, V).

    Raises:
        CapabilityError: beta > 0, no Hessian-vector oracle and fallback disabled
    """
    g = obj.gradient(X)
    dV = -2.0 * math.sqrt(obj.mu) * V - (1.0 + math.sqrt(obj.mu * s)) * g
    if beta > 0.0:
        if fallback and not obj.has_hvp:
            warn_fallback(obj.name)
        dV = dV - beta * math.sqrt(s) * obj.hessian_vector(X, V, fallback=fallback)
    return V.copy(), dV


def lr_rhs(obj: Objective, X: np.ndarray, V: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Low-resolution field at (X, V), the common s → 0 limit."""
    return V.copy(), -2.0 * math.sqrt(obj.mu) * V - obj.gradient(X)
