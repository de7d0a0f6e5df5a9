"""
Exception hierarchy for BetaNAG.

Every error derives from BetaNAGError and, where one fits, from the matching
builtin so callers can catch either.
"""

from typing import Optional


class BetaNAGError(Exception):
    """Base class for all BetaNAG errors."""


class DimensionError(BetaNAGError, ValueError):
    """Vector dimension does not match the objective."""


class InvalidObjectiveError(BetaNAGError, ValueError):
    """Objective parameters are outside the supported class."""


class ObjectiveConstructionError(BetaNAGError, RuntimeError):
    """Internal minimizer solve did not reach tolerance."""


class ParameterDomainError(BetaNAGError, ValueError):
    """Method or analysis parameters are outside their domain."""


class DivergenceError(BetaNAGError, ArithmeticError):
    """A discrete run produced a non-finite iterate."""

    def __init__(self, iteration: int, message: Optional[str] = None):
        self.iteration = iteration
        super().__init__(message or f"Non-finite iterate at k={iteration}")


class IntegrationBlowupError(BetaNAGError, ArithmeticError):
    """ODE integration produced a non-finite state."""

    def __init__(self, time: float, message: Optional[str] = None):
        self.time = time
        super().__init__(message or f"Non-finite ODE state at t={time:.6g}")


class CapabilityError(BetaNAGError, TypeError):
    """Objective lacks an oracle the computation needs."""


class SpanError(BetaNAGError, ValueError):
    """Requested horizon exceeds the available trajectory or solution."""


class ConfigurationError(BetaNAGError, ValueError):
    """Arguments disagree with the run that produced the data."""


class NoRealRootError(BetaNAGError, ArithmeticError):
    """Quadratic for the critical β has a negative discriminant."""


class UniformRegimeError(BetaNAGError):
    """h(β) keeps one sign on [0, 1], so there is no critical β."""

    def __init__(self, regime: str, h0: float, h1: float):
        self.regime = regime
        self.h0 = h0
        self.h1 = h1
        super().__init__(f"No sign change of h on [0, 1] (h(0)={h0:.6g}, h(1)={h1:.6g}): {regime}")


class WindowEmptyError(BetaNAGError, ValueError):
    """Step-size window of the discrete rate analysis is empty for these (mu, L)."""
