"""
BetaNAG - the β-interpolated momentum family between heavy ball and NAG-SC.

Discrete methods, high-resolution ODEs, Lyapunov energy functionals and the
phase transition at the critical β, with a harness that checks every bound.
"""

__version__ = "0.1.0"
__author__ = "BetaNAG Contributors"
__license__ = "Apache-2.0"
