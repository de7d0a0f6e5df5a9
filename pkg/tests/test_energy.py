"""
Tests for betanag.energy package.

Tests the discrete and continuous energy functionals and their
decrement checks.
"""

import numpy as np
import pytest

from betanag.core.models import MethodConfig


class TestDiscreteEnergy:
    """Tests for discrete_energy and energy_sequence."""

    def test_heavy_ball_by_hand(self, unit_quadratic):
        """Test E_0 at x = 1, v = 0 for f = x²/2, s = 1/4: 1.5 + 4 = 5.5."""
        from betanag.energy import discrete_energy

        value = discrete_energy(0.0, 0.25, unit_quadratic, np.array([1.0]), np.array([0.0]))
        assert value == pytest.approx(5.5)

    def test_nag_sc_by_hand(self, unit_quadratic):
        """Test E_1 at the same state: 1.5 + 20.25/4 - 0.25."""
        from betanag.energy import discrete_energy

        value = discrete_energy(1.0, 0.25, unit_quadratic, np.array([1.0]), np.array([0.0]))
        assert value == pytest.approx(6.3125)

    def test_zero_at_rest_in_minimizer(self, quadratic):
        """Test E = 0 at (x*, 0)."""
        from betanag.energy import discrete_energy

        assert discrete_energy(0.5, 0.025, quadratic, np.zeros(2), np.zeros(2)) == 0.0

    def test_requires_mu_s_below_one(self, unit_quadratic):
        """Test ParameterDomainError when μs ≥ 1."""
        from betanag.core.errors import ParameterDomainError
        from betanag.energy import discrete_energy

        with pytest.raises(ParameterDomainError):
            discrete_energy(0.5, 1.0, unit_quadratic, np.array([1.0]), np.array([0.0]))

    def test_sequence_length(self, quadratic, method_config, x0):
        """Test one energy value per stored velocity."""
        from betanag.energy import energy_sequence
        from betanag.methods import run

        traj = run(method_config, quadratic, x0)
        values = energy_sequence(traj, quadratic, 1.0, method_config.step)

        assert values.shape == (traj.num_steps,)


class TestDiscreteDecrement:
    """Tests for check_discrete_decrement."""

    @pytest.mark.parametrize("beta", [0.0, 0.5, 1.0])
    def test_no_violations_on_quadratic(self, quadratic, x0, beta):
        """Test that the decrement inequality holds at s = 1/(4L)."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        traj = run(MethodConfig(beta=beta, step=0.025, max_iter=200), quadratic, x0)
        series = check_discrete_decrement(traj, beta, 0.025, quadratic)

        assert series.violations == []
        assert series.binding
        assert series.worst_margin <= 1e-12

    def test_series_layout(self, quadratic, method_config, x0):
        """Test one entry per energy, with the last point carrying no step."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        traj = run(method_config, quadratic, x0)
        series = check_discrete_decrement(traj, 1.0, method_config.step, quadratic)

        assert len(series.values) == traj.num_steps
        for array in (series.index, series.decrements, series.bound_rhs, series.violated):
            assert len(array) == len(series.values)
        np.testing.assert_allclose(series.decrements[:-1], np.diff(series.values))
        assert np.isnan(series.decrements[-1])
        assert np.isnan(series.bound_rhs[-1])
        assert not series.violated[-1]
        assert np.isfinite(series.worst_margin)

    def test_run_stopped_at_minimizer(self, quadratic):
        """Test that a run with no steps gives an empty series and no violations."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        config = MethodConfig(beta=1.0, step=0.025, max_iter=50, grad_tol=1e-8)
        traj = run(config, quadratic, [0.0, 0.0])
        series = check_discrete_decrement(traj, 1.0, 0.025, quadratic)

        assert traj.num_steps == 0
        assert len(series.values) == len(series.decrements) == len(series.index) == 0
        assert series.violations == []
        assert series.worst_margin == 0.0
        assert series.extras["envelope_violations"] == 0
        assert series.extras["initial_energy"] == 0.0
        assert series.extras["initial_bound_holds"]

    def test_single_step_run(self, quadratic, x0):
        """Test that one step gives one energy and nothing to compare it with."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        traj = run(MethodConfig(beta=0.5, step=0.025, max_iter=1), quadratic, x0)
        series = check_discrete_decrement(traj, 0.5, 0.025, quadratic)

        assert len(series.values) == 1
        assert np.isnan(series.decrements[0])
        assert series.violations == []
        assert series.worst_margin == 0.0

    def test_extras(self, quadratic, method_config, x0):
        """Test the envelope, the initial-energy bound and the rate."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run
        from betanag.phase import contraction_rate

        traj = run(method_config, quadratic, x0)
        series = check_discrete_decrement(traj, 1.0, method_config.step, quadratic)
        extras = series.extras

        assert extras["rate"] == pytest.approx(contraction_rate(1.0, 0.025, 1.0, 10.0))
        assert extras["envelope_violations"] == 0
        assert extras["initial_bound_holds"]
        assert 0 < extras["initial_energy"] <= extras["initial_bound"]
        assert extras["smoothness_form_binding"]
        assert extras["three_term_binding"]

    def test_advisory_above_quarter_inverse_lip(self, quadratic, x0):
        """Test that s > 1/(4L) keeps the check but marks it advisory."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        traj = run(MethodConfig(beta=1.0, step=0.06, max_iter=50), quadratic, x0)
        series = check_discrete_decrement(traj, 1.0, 0.06, quadratic)

        assert not series.binding
        assert "advisory" in series.note
        assert not series.extras["three_term_binding"]
        assert series.extras["smoothness_form_binding"]

    def test_parameter_mismatch(self, quadratic, method_config, x0):
        """Test ConfigurationError when (β, s) differ from the run."""
        from betanag.core.errors import ConfigurationError
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        traj = run(method_config, quadratic, x0)
        with pytest.raises(ConfigurationError):
            check_discrete_decrement(traj, 0.5, method_config.step, quadratic)

    def test_reference_variant_uses_effective_beta(self, quadratic, x0):
        """Test that a NAG-SC reference run is checked as β = 1."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run

        config = MethodConfig(beta=0.0, step=0.025, max_iter=50, variant="nag_sc_reference")
        traj = run(config, quadratic, x0)
        series = check_discrete_decrement(traj, 1.0, 0.025, quadratic)

        assert series.violations == []


class TestContinuousEnergy:
    """Tests for the continuous energy, its derivative and Δ."""

    def test_energy_by_hand(self, unit_quadratic):
        """Test E at X = 1, V = 0 for f = x²/2, s = 1/4, β = 1: 0.75 + 6.25/4."""
        from betanag.energy import continuous_energy

        value = continuous_energy(1.0, 0.25, unit_quadratic, np.array([1.0]), np.array([0.0]))
        assert value == pytest.approx(2.3125)

    def test_delta_by_hand(self, unit_quadratic):
        """Test Δ at the same state: (0.3125 + 0.75)/4."""
        from betanag.energy import continuous_decrement_delta

        value = continuous_decrement_delta(1.0, 0.25, unit_quadratic, np.array([1.0]), np.array([0.0]))
        assert value == pytest.approx(0.265625)

    def test_delta_nonnegative(self, logsumexp):
        """Test Δ ≥ 0 at random states for β across [0, 1]."""
        from betanag.energy import continuous_decrement_delta

        rng = np.random.default_rng(11)
        for beta in np.linspace(0.0, 1.0, 5):
            for _ in range(10):
                X, V = rng.normal(size=2), rng.normal(size=2)
                assert continuous_decrement_delta(beta, 0.025, logsumexp, X, V) >= 0.0

    def test_derivative_matches_differences(self, logsumexp):
        """Test the exact dE/dt against centered differences along a solution."""
        from betanag.continuous import solve_high_resolution
        from betanag.energy import continuous_energy_derivative, energy_along
        from betanag.energy.continuous import finite_difference_derivative

        beta, s = 0.7, 0.025
        sol = solve_high_resolution(logsumexp, beta, s, [1.0, -1.0], 2.0)
        values = energy_along(sol, logsumexp, beta, s)
        numeric = finite_difference_derivative(values, sol.integrator_step)
        exact = np.array(
            [
                continuous_energy_derivative(beta, s, logsumexp, X, V)
                for X, V in zip(sol.positions, sol.velocities)
            ]
        )

        np.testing.assert_allclose(numeric[1:-1], exact[1:-1], rtol=1e-3, atol=1e-4 * np.abs(exact).max())

    def test_finite_difference_exact_on_quadratics(self):
        """Test that the second-order stencil differentiates t² exactly."""
        from betanag.energy.continuous import finite_difference_derivative

        t = 0.1 * np.arange(6)
        np.testing.assert_allclose(finite_difference_derivative(t**2, 0.1), 2.0 * t, atol=1e-12)
        np.testing.assert_allclose(finite_difference_derivative(np.array([1.0, 3.0]), 0.5), [4.0, 4.0])


class TestContinuousDecay:
    """Tests for check_continuous_decay."""

    def test_decay_holds(self, quadratic, x0):
        """Test dE/dt ≤ -(√μ/4)E and the envelope on the quadratic."""
        from betanag.continuous import solve_high_resolution
        from betanag.energy import check_continuous_decay

        sol = solve_high_resolution(quadratic, 1.0, 0.025, x0, 10.0)
        series = check_continuous_decay(sol, 1.0, 0.025, quadratic)

        assert series.violations == []
        assert series.extras["envelope_violations"] == 0
        assert series.extras["min_delta"] >= 0.0
        assert series.binding
        np.testing.assert_array_equal(series.index, sol.times)

    def test_parameter_mismatch(self, quadratic, x0):
        """Test ConfigurationError for a solution integrated with another s."""
        from betanag.continuous import solve_high_resolution
        from betanag.core.errors import ConfigurationError
        from betanag.energy import check_continuous_decay

        sol = solve_high_resolution(quadratic, 1.0, 0.025, x0, 1.0)
        with pytest.raises(ConfigurationError):
            check_continuous_decay(sol, 1.0, 0.0125, quadratic)

    def test_low_resolution_solution_rejected(self, quadratic, x0):
        """Test that a low-resolution solution is rejected by the high-resolution energy."""
        from betanag.continuous import solve_low_resolution
        from betanag.core.errors import ConfigurationError
        from betanag.energy import check_continuous_decay

        sol = solve_low_resolution(quadratic, 0.025, x0, 1.0)
        with pytest.raises(ConfigurationError):
            check_continuous_decay(sol, 0.0, 0.025, quadratic)
