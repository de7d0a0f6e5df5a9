"""
Diagonal quadratic objectives f(x) = ½(x - x*)ᵀD(x - x*).
"""

import logging
from typing import Optional, Sequence

import numpy as np

from ..core.errors import DimensionError, InvalidObjectiveError
from .base import Objective

logger = logging.getLogger(__name__)


def make_quadratic(
    eigenvalues: Sequence[float], x_star: Optional[Sequence[float]] = None
) -> Objective:
    """
    Build the diagonal quadratic with the given spectrum and minimizer.

    Args:
        eigenvalues: Diagonal of D, all positive
        x_star: Minimizer, zeros when omitted

    Returns:
        Objective with mu = min eigenvalue, lip = max eigenvalue, hess_lip = 0

    Raises:
        InvalidObjectiveError: Nonpositive or non-finite eigenvalue
        DimensionError: x_star length differs from the spectrum
    """
    diag = np.asarray(eigenvalues, dtype=np.float64).ravel()
    if diag.size == 0:
        raise InvalidObjectiveError("Quadratic needs at least one eigenvalue")
    if not np.all(np.isfinite(diag)) or np.any(diag <= 0):
        raise InvalidObjectiveError(f"Eigenvalues must be positive and finite, got {diag.tolist()}")

    n = diag.size
    if x_star is None:
        center = np.zeros(n)
    else:
        center = np.asarray(x_star, dtype=np.float64).ravel()
        if center.shape != (n,):
            raise DimensionError(f"x_star has dimension {center.size}, expected {n}")
    center = center.copy()
    center.setflags(write=False)

    def value(x: np.ndarray) -> float:
        d = x - center
        return 0.5 * float(d @ (diag * d))

    def gradient(x: np.ndarray) -> np.ndarray:
        return diag * (x - center)

    def hvp(x: np.ndarray, v: np.ndarray) -> np.ndarray:
        return diag * v

    logger.debug(f"Quadratic objective: n={n}, mu={diag.min()}, L={diag.max()}")

    return Objective(
        dimension=n,
        value=value,
        gradient=gradient,
        hvp=hvp,
        mu=float(diag.min()),
        lip=float(diag.max()),
        minimizer=center,
        min_value=0.0,
        hess_lip=0.0,
        name=f"quadratic{diag.tolist()}",
    )
