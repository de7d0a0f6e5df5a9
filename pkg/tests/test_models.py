"""
Tests for betanag.core.models module.
"""

from pathlib import Path

import numpy as np
import pytest


class TestCell:
    """Tests for Cell names."""

    def test_pair_name(self):
        """Test the b{β}_s{s} token."""
        from betanag.core.models import Cell

        assert Cell(beta=0.5, step=0.025).name == "b0.5_s0.025"
        assert Cell(beta=0.0, step=1 / 3).name == "b0_s0.333333"

    def test_beta_label(self):
        """Test that a label replaces the numeric β."""
        from betanag.core.models import Cell

        cell = Cell(beta=0.8921, step=0.025, beta_label="beta_c")
        assert cell.name == "bbeta_c_s0.025"

    def test_ladder_cell(self):
        """Test that a nan step drops the s part."""
        from betanag.core.models import Cell

        assert Cell(beta=1.0, step=float("nan")).name == "b1"

    def test_explicit_label(self):
        """Test that label overrides everything."""
        from betanag.core.models import Cell

        assert Cell(beta=0.5, step=0.1, label="mu_over_L0.1_c4").name == "mu_over_L0.1_c4"

    def test_to_dict(self):
        """Test serialization carries the name."""
        from betanag.core.models import Cell

        data = Cell(beta=1.0, step=0.025).to_dict()
        assert data == {"name": "b1_s0.025", "beta": 1.0, "step": 0.025, "beta_label": ""}


class TestCheckOutcome:
    """Tests for CheckOutcome."""

    @pytest.mark.parametrize(
        "binding,passed,expected",
        [(True, True, False), (True, False, True), (False, False, False), (False, True, False)],
    )
    def test_failed_binding(self, binding, passed, expected):
        """Test that only binding failures count."""
        from betanag.core.models import CheckOutcome

        outcome = CheckOutcome(check="c", cell="x", inequality="i", binding=binding, passed=passed)
        assert outcome.failed_binding is expected

    def test_to_dict_stringifies_artifacts(self, tmp_path):
        """Test that artifact paths serialize as strings."""
        from betanag.core.models import CheckOutcome

        outcome = CheckOutcome(
            check="energy-decrement",
            cell="b1_s0.025",
            inequality="decrement",
            binding=True,
            passed=True,
            artifacts=[tmp_path / "energy_b1_s0.025.csv"],
        )
        data = outcome.to_dict()

        assert data["artifacts"] == [str(tmp_path / "energy_b1_s0.025.csv")]
        assert data["violations"] == 0


class TestExperimentSummary:
    """Tests for ExperimentSummary exit codes."""

    def _outcome(self, binding, passed):
        from betanag.core.models import CheckOutcome

        return CheckOutcome(check="c", cell="x", inequality="i", binding=binding, passed=passed)

    def test_all_pass(self):
        """Test exit code 0 when everything passes."""
        from betanag.core.models import ExperimentSummary

        summary = ExperimentSummary(output_dir=Path("."), outcomes=[self._outcome(True, True)])
        assert summary.exit_code == 0

    def test_advisory_failure_exits_zero(self):
        """Test that non-binding failures keep exit code 0."""
        from betanag.core.models import ExperimentSummary

        summary = ExperimentSummary(output_dir=Path("."), outcomes=[self._outcome(False, False)])
        assert summary.exit_code == 0
        assert summary.binding_failures == []

    def test_binding_failure_exits_one(self):
        """Test exit code 1 on a binding failure."""
        from betanag.core.models import ExperimentSummary

        outcomes = [self._outcome(True, True), self._outcome(True, False)]
        summary = ExperimentSummary(output_dir=Path("."), outcomes=outcomes)

        assert summary.exit_code == 1
        assert len(summary.binding_failures) == 1


class TestEnergySeries:
    """Tests for EnergySeries properties."""

    def test_violations_and_margin(self):
        """Test violation indices and the worst margin."""
        from betanag.core.models import EnergySeries

        series = EnergySeries(
            index=np.array([0, 1, 2]),
            values=np.array([3.0, 2.0, 1.5, 1.6]),
            decrements=np.array([-1.0, -0.5, 0.1]),
            bound_rhs=np.array([-0.5, -0.2, -0.1]),
            violated=np.array([False, False, True]),
        )

        assert series.violations == [2]
        assert series.worst_margin == pytest.approx(0.2)

    def test_empty_margin(self):
        """Test that a run with no steps has margin 0."""
        from betanag.core.models import EnergySeries

        empty = np.array([])
        series = EnergySeries(empty, np.array([1.0]), empty, empty, empty.astype(bool))
        assert series.worst_margin == 0.0
        assert series.violations == []


class TestStepWindow:
    """Tests for StepWindow membership."""

    def test_contains_with_tolerance(self):
        """Test closed ends with a relative tolerance."""
        from betanag.core.models import StepWindow

        window = StepWindow(s_min=0.01, s_max=0.25, c_min=4.0, c_max=100.0)

        assert window.contains(0.25)
        assert window.contains(0.25 * (1 + 1e-13))
        assert not window.contains(0.26)
        assert not window.contains(0.005)

    def test_empty_window(self):
        """Test that an empty window contains nothing and require() raises."""
        from betanag.core.errors import WindowEmptyError
        from betanag.core.models import StepWindow

        window = StepWindow(s_min=0.3, s_max=0.25, c_min=4.0, c_max=3.3)

        assert window.empty
        assert not window.contains(0.27)
        with pytest.raises(WindowEmptyError):
            window.require()
