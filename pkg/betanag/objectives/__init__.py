"""
Certified test functions in S²_{μ,L} with known μ, L and minimizer.
"""

from .base import Objective, finite_difference_hvp
from .certify import certify
from .factory import build_objective, get_objective
from .logsumexp import make_smooth_nonquadratic
from .quadratic import make_quadratic

__all__ = [
    "Objective",
    "build_objective",
    "certify",
    "finite_difference_hvp",
    "get_objective",
    "make_quadratic",
    "make_smooth_nonquadratic",
]
