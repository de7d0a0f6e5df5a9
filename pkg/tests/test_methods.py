"""
Tests for betanag.methods package.

Tests initial conditions, the single-variable and two-sequence update rules,
the driver and the recurrence residuals.
"""

import math

import numpy as np
import pytest

from betanag.core.models import MethodConfig, Variant


class TestMethodConfig:
    """Tests for MethodConfig validation."""

    @pytest.mark.parametrize("beta", [-0.1, 1.5])
    def test_beta_out_of_range(self, beta):
        """Test ParameterDomainError for β outside [0, 1]."""
        from betanag.core.errors import ParameterDomainError

        with pytest.raises(ParameterDomainError):
            MethodConfig(beta=beta, step=0.1)

    def test_nonpositive_step(self):
        """Test ParameterDomainError for s ≤ 0."""
        from betanag.core.errors import ParameterDomainError

        with pytest.raises(ParameterDomainError):
            MethodConfig(beta=0.5, step=0.0)

    def test_reference_variants_fix_beta(self):
        """Test effective_beta of the reference rules."""
        assert MethodConfig(beta=0.7, step=0.1, variant="heavy_ball_reference").effective_beta == 0.0
        assert MethodConfig(beta=0.2, step=0.1, variant="nag_sc_reference").effective_beta == 1.0
        assert MethodConfig(beta=0.2, step=0.1).effective_beta == 0.2


class TestInitState:
    """Tests for init_state and initial_velocity."""

    def test_first_iterate(self, unit_quadratic):
        """Test x1 = x0 - 2s∇f(x0)/(1 + √(μs)) on f = x²/2, s = 1/4."""
        from betanag.methods import init_state

        x0, x1 = init_state(MethodConfig(beta=1.0, step=0.25), unit_quadratic, [1.0])

        np.testing.assert_array_equal(x0, [1.0])
        np.testing.assert_allclose(x1, [2.0 / 3.0], rtol=1e-15)

    def test_initial_velocity(self, unit_quadratic):
        """Test v0 = -2√s∇f(x0)/(1 + √(μs)) = -2/3."""
        from betanag.methods import initial_velocity

        v0 = initial_velocity(unit_quadratic, 0.25, np.array([1.0]))
        np.testing.assert_allclose(v0, [-2.0 / 3.0], rtol=1e-15)

    def test_fixed_point(self, quadratic, method_config):
        """Test that starting at x* gives x1 = x*."""
        from betanag.methods import init_state

        _, x1 = init_state(method_config, quadratic, [0.0, 0.0])
        np.testing.assert_array_equal(x1, [0.0, 0.0])

    def test_dimension_mismatch(self, quadratic, method_config):
        """Test DimensionError for a wrong-length x0."""
        from betanag.core.errors import DimensionError
        from betanag.methods import init_state

        with pytest.raises(DimensionError):
            init_state(method_config, quadratic, [1.0])


class TestStepSingleVariable:
    """Tests for step_single_variable."""

    def test_nag_sc_step(self, unit_quadratic):
        """Test β = 1 from (1, 2/3) on f = x²/2, s = 1/4: 0.41666..."""
        from betanag.methods import step_single_variable

        config = MethodConfig(beta=1.0, step=0.25)
        x = step_single_variable(config, unit_quadratic, np.array([1.0]), np.array([2.0 / 3.0]))
        np.testing.assert_allclose(x, [5.0 / 12.0], rtol=1e-14)

    def test_heavy_ball_step(self, unit_quadratic):
        """Test β = 0 from the same state: 0.38888..."""
        from betanag.methods import step_single_variable

        config = MethodConfig(beta=0.0, step=0.25)
        x = step_single_variable(config, unit_quadratic, np.array([1.0]), np.array([2.0 / 3.0]))
        np.testing.assert_allclose(x, [7.0 / 18.0], rtol=1e-14)

    @pytest.mark.parametrize("beta", [0.0, 0.3, 1.0])
    def test_stationary_at_minimizer(self, quadratic, beta):
        """Test that x_prev = x_curr = x* stays at x*."""
        from betanag.methods import step_single_variable

        config = MethodConfig(beta=beta, step=0.025)
        x = step_single_variable(config, quadratic, np.zeros(2), np.zeros(2))
        np.testing.assert_array_equal(x, np.zeros(2))

    def test_precomputed_gradients_change_nothing(self, logsumexp):
        """Test that passing gradients in gives the same bits."""
        from betanag.methods import step_single_variable

        config = MethodConfig(beta=0.4, step=0.02)
        xp, xc = np.array([0.5, -0.5]), np.array([0.45, -0.4])
        a = step_single_variable(config, logsumexp, xp, xc)
        b = step_single_variable(config, logsumexp, xp, xc, logsumexp.gradient(xp), logsumexp.gradient(xc))
        np.testing.assert_array_equal(a, b)

    def test_rejects_other_variants(self, quadratic):
        """Test ParameterDomainError for the two-sequence variant."""
        from betanag.core.errors import ParameterDomainError
        from betanag.methods import step_single_variable

        config = MethodConfig(beta=0.5, step=0.025, variant=Variant.TWO_SEQUENCE)
        with pytest.raises(ParameterDomainError):
            step_single_variable(config, quadratic, np.ones(2), np.ones(2))


class TestTwoSequence:
    """Tests for the two-sequence formulation."""

    def test_first_step_matches_x1(self, unit_quadratic):
        """Test that y_0^β makes the first two-sequence step land on x1."""
        from betanag.methods import init_state, initial_y_beta, step_two_sequence

        config = MethodConfig(beta=0.6, step=0.25, variant=Variant.TWO_SEQUENCE)
        y0 = initial_y_beta(config, unit_quadratic, [1.0])
        x1, _ = step_two_sequence(config, unit_quadratic, np.array([1.0]), y0)
        _, expected = init_state(config, unit_quadratic, [1.0])

        np.testing.assert_allclose(x1, expected, rtol=1e-14)

    def test_requires_mu_s_below_one(self, unit_quadratic):
        """Test ParameterDomainError when μs ≥ 1."""
        from betanag.core.errors import ParameterDomainError
        from betanag.methods import initial_y_beta

        config = MethodConfig(beta=0.5, step=1.0, variant=Variant.TWO_SEQUENCE)
        with pytest.raises(ParameterDomainError):
            initial_y_beta(config, unit_quadratic, [1.0])


class TestRun:
    """Tests for the iteration driver."""

    def test_trajectory_shapes(self, quadratic, method_config, x0):
        """Test K+1 iterates, K velocities and per-iterate series."""
        from betanag.methods import run

        traj = run(method_config, quadratic, x0)

        assert traj.num_steps == 200
        assert traj.iterates.shape == (201, 2)
        assert traj.velocities.shape == (200, 2)
        assert traj.gaps.shape == (201,)
        assert traj.grad_norms.shape == (201,)

    def test_velocities_from_stored_iterates(self, quadratic, method_config, x0):
        """Test v_k = (x_{k+1} - x_k)/√s exactly."""
        from betanag.methods import run

        traj = run(method_config, quadratic, x0)
        expected = (traj.iterates[1:] - traj.iterates[:-1]) / math.sqrt(method_config.step)
        np.testing.assert_array_equal(traj.velocities, expected)

    def test_gaps_nonnegative_and_shrinking(self, quadratic, method_config, x0):
        """Test that the gap is nonnegative and ends far below its start."""
        from betanag.methods import run

        traj = run(method_config, quadratic, x0)

        assert np.all(traj.gaps >= 0)
        assert traj.final_gap < 1e-20 * traj.gaps[0]

    def test_grad_tol_stops_early(self, quadratic, x0):
        """Test the gradient-norm stopping rule."""
        from betanag.methods import run

        config = MethodConfig(beta=1.0, step=0.025, max_iter=1000, grad_tol=1e-6)
        traj = run(config, quadratic, x0)

        assert traj.num_steps < 1000
        assert traj.grad_norms[-1] <= 1e-6
        assert np.all(traj.grad_norms[:-1] > 1e-6)

    def test_start_at_minimizer_with_tolerance(self, quadratic):
        """Test that a converged start records a single iterate."""
        from betanag.methods import run

        config = MethodConfig(beta=1.0, step=0.025, grad_tol=1e-8)
        traj = run(config, quadratic, [0.0, 0.0])

        assert traj.num_steps == 0
        assert traj.velocities.shape[0] == 0

    def test_divergence_raises(self, quadratic, x0):
        """Test DivergenceError with the failing iteration on a huge step."""
        from betanag.core.errors import DivergenceError
        from betanag.methods import run

        config = MethodConfig(beta=0.0, step=0.5, max_iter=5000)
        with pytest.raises(DivergenceError) as exc_info:
            run(config, quadratic, x0)

        assert exc_info.value.iteration > 1

    def test_gradient_descent_variant(self, quadratic, x0):
        """Test that gradient descent takes plain gradient steps."""
        from betanag.methods import run

        config = MethodConfig(beta=0.0, step=0.1, max_iter=3, variant=Variant.GRADIENT_DESCENT)
        traj = run(config, quadratic, x0)

        np.testing.assert_allclose(traj.iterates[1], [0.9, 0.0])

    def test_deterministic(self, logsumexp):
        """Test that two runs give identical bits."""
        from betanag.methods import run

        config = MethodConfig(beta=0.5, step=0.025, max_iter=100)
        a = run(config, logsumexp, [1.0, -1.0])
        b = run(config, logsumexp, [1.0, -1.0])
        np.testing.assert_array_equal(a.iterates, b.iterates)


class TestResiduals:
    """Tests for the recurrence identities."""

    @pytest.mark.parametrize("beta", [0.0, 0.5, 1.0])
    def test_rearranged_form(self, logsumexp, beta):
        """Test that trajectories satisfy the second-difference identity."""
        from betanag.methods import rearranged_residuals, run

        traj = run(MethodConfig(beta=beta, step=0.025, max_iter=100), logsumexp, [1.0, 1.0])
        residuals = rearranged_residuals(traj, logsumexp)

        assert residuals.shape == (99,)
        assert residuals.max() <= 1e-10

    @pytest.mark.parametrize("beta", [0.0, 0.5, 1.0])
    def test_velocity_recursion(self, quadratic, beta, x0):
        """Test the phase-space velocity recursion."""
        from betanag.methods import run, velocity_recursion_residuals

        traj = run(MethodConfig(beta=beta, step=0.025, max_iter=100), quadratic, x0)
        assert velocity_recursion_residuals(traj, quadratic).max() <= 1e-10

    def test_gradient_descent_rejected(self, quadratic, x0):
        """Test ConfigurationError for gradient descent."""
        from betanag.core.errors import ConfigurationError
        from betanag.methods import rearranged_residuals, run

        config = MethodConfig(beta=0.0, step=0.025, max_iter=5, variant="gradient_descent")
        traj = run(config, quadratic, x0)
        with pytest.raises(ConfigurationError):
            rearranged_residuals(traj, quadratic)


class TestObservedContraction:
    """Tests for observed_contraction."""

    def test_geometric_series(self):
        """Test recovery of q from gaps q^{-k}."""
        from betanag.methods import observed_contraction

        gaps = 1.5 ** -np.arange(300, dtype=float)
        assert observed_contraction(gaps) == pytest.approx(1.5, rel=1e-10)

    def test_all_zero_gaps(self):
        """Test that exact convergence reports an infinite factor."""
        from betanag.methods import observed_contraction

        assert observed_contraction(np.zeros(10)) == math.inf
