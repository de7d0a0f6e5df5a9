"""
Pytest configuration and shared fixtures for BetaNAG tests.
"""

import math
from pathlib import Path

import pytest
import yaml

from betanag.core.models import MethodConfig
from betanag.objectives import make_quadratic, make_smooth_nonquadratic

# ============================================================================
# Path Fixtures
# ============================================================================


@pytest.fixture
def fixtures_dir():
    """Return the path to the test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def minimal_config_path(fixtures_dir):
    """Return path to the minimal experiment config."""
    return fixtures_dir / "minimal_config.yaml"


# ============================================================================
# Objective Fixtures
# ============================================================================


@pytest.fixture
def quadratic():
    """Quadratic with spectrum [1, 10]: mu = 1, L = 10, x* = 0."""
    return make_quadratic([1.0, 10.0])


@pytest.fixture
def unit_quadratic():
    """f(x) = x²/2 in one dimension: mu = L = 1."""
    return make_quadratic([1.0])


@pytest.fixture(scope="session")
def logsumexp():
    """Regularized log-sum-exp with mu = 1 and L = 10."""
    return make_smooth_nonquadratic(dimension=2, mu=1.0, seed=7, smoothness=9.0)


@pytest.fixture
def step():
    """s = 1/(4L) for L = 10."""
    return 1.0 / 40.0


@pytest.fixture
def x0():
    return [1.0, 1.0]


@pytest.fixture
def method_config(step):
    """NAG-SC endpoint at s = 1/40."""
    return MethodConfig(beta=1.0, step=step, max_iter=200)


# ============================================================================
# Config Fixtures
# ============================================================================


@pytest.fixture
def valid_config_dict(tmp_path):
    """Minimal valid experiment config as a dictionary."""
    return {
        "objective": {"kind": "quadratic", "eigenvalues": [1, 10], "x0": [1, 1]},
        "methods": {"betas": [0, 1], "steps": [0.025], "max_iter": 200},
        "checks": ["energy-decrement"],
        "output_dir": str(tmp_path / "results"),
    }


@pytest.fixture
def valid_config_file(tmp_path, valid_config_dict):
    """Write the valid config to a YAML file."""
    config_path = tmp_path / "config.yaml"
    with open(config_path, "w") as f:
        yaml.dump(valid_config_dict, f)
    return config_path


# ============================================================================
# Helpers
# ============================================================================


def damped_oscillator(mu: float, x0: float, v0: float, t: float) -> float:
    """
    Closed-form X(t) of Ẍ + 2√μẊ + μX = 0, the low-resolution ODE of f = μx²/2.

    Critically damped: X(t) = (x0 + (v0 + √μ x0) t) e^{-√μ t}.
    """
    rm = math.sqrt(mu)
    return (x0 + (v0 + rm * x0) * t) * math.exp(-rm * t)
