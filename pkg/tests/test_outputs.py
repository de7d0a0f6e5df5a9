"""
Tests for betanag.outputs package.

Tests the CSV writers, the JSON and Markdown summary renderers, the
renderer factory and the plot-script emitter.
"""

import json
import math
from pathlib import Path

import numpy as np
import pytest

from betanag.core.models import CheckOutcome, ExperimentSummary, MethodConfig


@pytest.fixture
def summary(tmp_path):
    """Summary with one pass, one binding failure and one advisory failure."""
    outcomes = [
        CheckOutcome("energy-decrement", "b1_s0.025", "decrement", True, True, worst_margin=-1e-3),
        CheckOutcome("energy-decrement", "b0_s0.025", "decrement", True, False, 2e-9, 3),
        CheckOutcome("continuous-bound", "b0_s0.1", "decay", False, False, note="s > 1/L"),
    ]
    return ExperimentSummary(
        output_dir=tmp_path,
        outcomes=outcomes,
        cells=[{"name": "b1_s0.025", "rate_factor": math.inf, "bound_scale": float("nan")}],
        metadata={"objective": "quadratic", "mu": 1.0, "lip": 10.0},
    )


class TestFormatValue:
    """Tests for format_value."""

    def test_floats_round_trip(self):
        """Test that floats are written with repr."""
        from betanag.outputs.csv_writer import format_value

        assert format_value(0.1) == "0.1"
        assert float(format_value(1 / 3)) == 1 / 3
        assert format_value(np.float64(2.5)) == "2.5"

    def test_other_types(self):
        """Test bools, ints, None and strings."""
        from betanag.outputs.csv_writer import format_value

        assert format_value(True) == "true"
        assert format_value(np.bool_(False)) == "false"
        assert format_value(np.int64(7)) == "7"
        assert format_value(None) == ""
        assert format_value("subcritical") == "subcritical"
        assert format_value(math.inf) == "inf"


class TestCsvWriters:
    """Tests for the CSV artifact writers."""

    def test_write_csv_checks_row_length(self, tmp_path):
        """Test ValueError for a ragged row."""
        from betanag.outputs.csv_writer import write_csv

        with pytest.raises(ValueError):
            write_csv(tmp_path / "bad.csv", ["a", "b"], [[1, 2], [3]])

    def test_write_csv_creates_parent(self, tmp_path):
        """Test that nested directories are created."""
        from betanag.outputs.csv_writer import read_csv, write_csv

        path = write_csv(tmp_path / "deep" / "x.csv", ["a"], [[1.5]])
        assert read_csv(path) == [{"a": "1.5"}]

    def test_trajectory_csv(self, tmp_path, quadratic, x0):
        """Test the trajectory layout; the last row has blank velocities."""
        from betanag.methods import run
        from betanag.outputs.csv_writer import read_csv, write_trajectory_csv

        traj = run(MethodConfig(beta=1.0, step=0.025, max_iter=10), quadratic, x0)
        rows = read_csv(write_trajectory_csv(tmp_path / "trajectory.csv", traj))

        assert list(rows[0]) == ["k", "x0", "x1", "v0", "v1", "gap", "grad_norm"]
        assert len(rows) == 11
        assert float(rows[0]["gap"]) == pytest.approx(5.5)
        assert rows[-1]["v0"] == ""
        assert float(rows[3]["x1"]) == traj.iterates[3, 1]

    def test_energy_csv(self, tmp_path, quadratic, x0):
        """Test one row per energy value with the chosen index column."""
        from betanag.energy import check_discrete_decrement
        from betanag.methods import run
        from betanag.outputs.csv_writer import read_csv, write_energy_csv

        traj = run(MethodConfig(beta=1.0, step=0.025, max_iter=20), quadratic, x0)
        series = check_discrete_decrement(traj, 1.0, 0.025, quadratic)

        rows = read_csv(write_energy_csv(tmp_path / "energy.csv", series))
        assert list(rows[0]) == ["k", "E", "dE", "rhs", "violated"]
        assert len(rows) == traj.num_steps == len(series.values)
        assert float(rows[-1]["E"]) == series.values[-1]
        assert rows[-1]["dE"] == "" and rows[-1]["rhs"] == ""
        assert float(rows[0]["dE"]) == series.decrements[0]
        assert {r["violated"] for r in rows} == {"false"}

        rows = read_csv(write_energy_csv(tmp_path / "energy_t.csv", series, index_column="t"))
        assert list(rows[0])[0] == "t"

    def test_ode_csv(self, tmp_path, quadratic, x0):
        """Test the ODE layout."""
        from betanag.continuous import solve_high_resolution
        from betanag.outputs.csv_writer import read_csv, write_ode_csv

        sol = solve_high_resolution(quadratic, 1.0, 0.025, x0, 0.5)
        rows = read_csv(write_ode_csv(tmp_path / "ode.csv", sol, quadratic))

        assert list(rows[0]) == ["t", "X0", "X1", "V0", "V1", "gap"]
        assert len(rows) == len(sol.times)
        assert float(rows[0]["t"]) == 0.0

    def test_phase_csv(self, tmp_path):
        """Test the phase layout and the blank β_c of a uniform row."""
        from betanag.outputs.csv_writer import PHASE_COLUMNS, read_csv, write_phase_csv
        from betanag.phase import analyze

        reports = [analyze(0.5, 0.25, 0.1, 1.0), analyze(0.0, 1 / 1600, 1.0, 10.0)]
        rows = read_csv(write_phase_csv(tmp_path / "phase_sweep.csv", reports))

        assert list(rows[0]) == PHASE_COLUMNS
        assert float(rows[0]["beta_c"]) == pytest.approx(reports[0].beta_c_closed)
        assert rows[1]["beta_c"] == ""
        assert rows[1]["in_window"] == "false"

    def test_deviation_csv(self, tmp_path):
        """Test the deviation layout."""
        from betanag.outputs.csv_writer import DEVIATION_COLUMNS, read_csv, write_deviation_csv

        rows = read_csv(write_deviation_csv(tmp_path / "dev.csv", [[0.025, 1e-3, 2e-2]]))
        assert list(rows[0]) == DEVIATION_COLUMNS

    def test_byte_identical(self, tmp_path, quadratic, x0):
        """Test that two writes of the same run produce identical bytes."""
        from betanag.methods import run
        from betanag.outputs.csv_writer import write_trajectory_csv

        config = MethodConfig(beta=0.5, step=0.025, max_iter=30)
        a = write_trajectory_csv(tmp_path / "a.csv", run(config, quadratic, x0))
        b = write_trajectory_csv(tmp_path / "b.csv", run(config, quadratic, x0))

        assert a.read_bytes() == b.read_bytes()


class TestJSONRenderer:
    """Tests for JSONRenderer."""

    def test_render(self, summary, tmp_path):
        """Test summary.json content."""
        from betanag.outputs.json_renderer import JSONRenderer

        path = JSONRenderer({"output_dir": tmp_path}).render(summary)
        data = json.loads(path.read_text(encoding="utf-8"))

        assert path.name == "summary.json"
        assert data["exit_code"] == 1
        assert data["$schema_version"] == "1.0"
        assert data["statistics"]["total_outcomes"] == 3
        assert data["statistics"]["binding_failures"] == 1
        assert data["statistics"]["advisory"] == 1
        assert data["metadata"]["lip"] == 10.0

    def test_non_finite_become_null(self, summary, tmp_path):
        """Test that inf and nan are written as null."""
        from betanag.outputs.json_renderer import JSONRenderer

        path = JSONRenderer({"output_dir": tmp_path}).render(summary)
        cell = json.loads(path.read_text(encoding="utf-8"))["cells"][0]

        assert cell["rate_factor"] is None
        assert cell["bound_scale"] is None

    def test_custom_filename(self, summary, tmp_path):
        """Test the filename option."""
        from betanag.outputs.json_renderer import JSONRenderer

        path = JSONRenderer({"output_dir": tmp_path, "filename": "run.json"}).render(summary)
        assert path == tmp_path / "run.json"

    def test_negative_indent_invalid(self):
        """Test validate_config rejects a negative indent."""
        from betanag.outputs.json_renderer import JSONRenderer

        with pytest.raises(ValueError):
            JSONRenderer({"indent": -1}).validate_config()


class TestMarkdownRenderer:
    """Tests for MarkdownRenderer."""

    def test_render(self, summary, tmp_path):
        """Test headings and statuses."""
        from betanag.outputs.markdown_renderer import MarkdownRenderer

        path = MarkdownRenderer({"output_dir": tmp_path}).render(summary)
        content = path.read_text(encoding="utf-8")

        assert content.startswith("# Experiment Summary")
        assert "## energy-decrement" in content
        assert "## continuous-bound" in content
        assert "| b1_s0.025 | decrement | yes | pass |" in content
        assert "| FAIL |" in content
        assert "fail (advisory)" in content
        assert "| binding failures | 1 |" in content

    def test_without_metadata(self, summary, tmp_path):
        """Test include_metadata=False."""
        from betanag.outputs.markdown_renderer import MarkdownRenderer

        renderer = MarkdownRenderer({"output_dir": tmp_path, "include_metadata": False})
        content = renderer.render(summary).read_text(encoding="utf-8")

        assert "| Property | Value |" not in content


class TestOutputFactory:
    """Tests for get_output_renderer."""

    @pytest.mark.parametrize("name", ["json", "JSON"])
    def test_json(self, name):
        """Test the json renderer by name."""
        from betanag.outputs.factory import get_output_renderer
        from betanag.outputs.json_renderer import JSONRenderer

        assert isinstance(get_output_renderer(name, {}), JSONRenderer)

    @pytest.mark.parametrize("name", ["markdown", "md"])
    def test_markdown(self, name):
        """Test the markdown renderer and its alias."""
        from betanag.outputs.factory import get_output_renderer
        from betanag.outputs.markdown_renderer import MarkdownRenderer

        assert isinstance(get_output_renderer(name, {}), MarkdownRenderer)

    def test_unknown(self):
        """Test ValueError for an unknown format."""
        from betanag.outputs.factory import get_output_renderer

        with pytest.raises(ValueError, match="Unsupported report format"):
            get_output_renderer("html", {})


class TestEmitPlots:
    """Tests for emit_plots."""

    def test_missing_directory(self, tmp_path):
        """Test that a missing directory writes nothing."""
        from betanag.outputs.plot_scripts import emit_plots

        assert emit_plots(tmp_path / "missing") == []

    def test_empty_directory(self, tmp_path):
        """Test that a directory without artifacts writes nothing."""
        from betanag.outputs.plot_scripts import emit_plots

        assert emit_plots(tmp_path) == []
        assert list(tmp_path.iterdir()) == []

    def test_scripts_for_present_artifacts(self, tmp_path):
        """Test that only plots with inputs are emitted and list their files."""
        from betanag.outputs.plot_scripts import emit_plots

        (tmp_path / "trajectory_b1_s0.025.csv").write_text("k,gap\n0,1.0\n")
        (tmp_path / "trajectory_b0_s0.025.csv").write_text("k,gap\n0,1.0\n")
        (tmp_path / "phase_sweep.csv").write_text("mu_over_L\n0.1\n")
        (tmp_path / "continuous_energy_b1_s0.025.csv").write_text("t,E\n0,1\n")

        written = emit_plots(tmp_path)

        assert sorted(p.name for p in written) == ["plot_gaps.py", "plot_phase.py"]
        gaps = (tmp_path / "plot_gaps.py").read_text(encoding="utf-8")
        assert '["trajectory_b0_s0.025.csv", "trajectory_b1_s0.025.csv"]' in gaps
        assert "import matplotlib.pyplot as plt" in gaps
        compile(gaps, "plot_gaps.py", "exec")
        compile((tmp_path / "plot_phase.py").read_text(encoding="utf-8"), "plot_phase.py", "exec")

    def test_overlays_skip_non_contracting_factors(self, tmp_path):
        """Test that bound overlays are drawn only for factors that shrink with k."""
        from betanag.outputs.plot_scripts import emit_plots

        (tmp_path / "trajectory_b0_s0.025.csv").write_text("k,gap\n0,1.0\n")
        (tmp_path / "energy_b0_s0.025.csv").write_text("k,E\n0,1.0\n")
        emit_plots(tmp_path)

        gaps = (tmp_path / "plot_gaps.py").read_text(encoding="utf-8")
        energy = (tmp_path / "plot_energy.py").read_text(encoding="utf-8")
        assert 'cell.get("contracting")' in gaps
        assert "factor > 1" in energy

    def test_all_scripts_compile(self, tmp_path):
        """Test every template is valid source once filled."""
        from betanag.outputs.plot_scripts import PLOTS, emit_plots

        for pattern in ("trajectory_a.csv", "energy_a.csv", "deviation_a.csv", "phase_sweep.csv"):
            (tmp_path / pattern).write_text("x\n")

        written = emit_plots(tmp_path)

        assert {p.name for p in written} == set(PLOTS)
        for path in written:
            compile(Path(path).read_text(encoding="utf-8"), path.name, "exec")
