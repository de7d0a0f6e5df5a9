"""
Artifacts of a run: CSV files, summary reports and plot scripts.
"""

from .csv_writer import (
    format_value,
    read_csv,
    write_csv,
    write_deviation_csv,
    write_energy_csv,
    write_ode_csv,
    write_phase_csv,
    write_trajectory_csv,
)
from .factory import get_output_renderer
from .plot_scripts import emit_plots

__all__ = [
    "emit_plots",
    "format_value",
    "get_output_renderer",
    "read_csv",
    "write_csv",
    "write_deviation_csv",
    "write_energy_csv",
    "write_ode_csv",
    "write_phase_csv",
    "write_trajectory_csv",
]
