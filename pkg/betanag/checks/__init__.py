"""
Experiment checks: each evaluates one family of inequalities over a grid of cells.
"""

from .factory import get_check

__all__ = ["get_check"]
