"""
CSV artifacts with a fixed column order.

Floats are written with repr, the shortest string that round-trips, so
identical runs give byte-identical files.
"""

import csv
import logging
from pathlib import Path
from typing import Any, Iterable, List, Sequence

import numpy as np

from ..core.models import EnergySeries, OdeSolution, PhaseReport, Trajectory
from ..objectives.base import Objective

logger = logging.getLogger(__name__)

PHASE_COLUMNS = ["mu_over_L", "c", "beta", "h", "ratio", "regime", "beta_c", "in_window"]
DEVIATION_COLUMNS = ["s", "deviation_hr", "deviation_lr"]
ENERGY_COLUMNS = ["k", "E", "dE", "rhs", "violated"]


def format_value(value: Any) -> str:
    """repr for floats, lowercase for bools, empty for None."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write rows under header; every row must have len(header) fields."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError(
                    f"Row has {len(row)} fields, header has {len(header)}: {path.name}"
                )
            writer.writerow([format_value(v) for v in row])
            count += 1
    logger.debug(f"Wrote {count} rows to {path}")
    return path


def _vector_columns(prefix: str, dimension: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(dimension)]


def _blank_nan(value: Any) -> Any:
    return None if isinstance(value, (float, np.floating)) and np.isnan(value) else value


def write_trajectory_csv(path: Path, traj: Trajectory) -> Path:
    """k,x0..,v0..,gap,grad_norm; the final iterate has no velocity and leaves v blank."""
    n = traj.iterates.shape[1]
    header = ["k"] + _vector_columns("x", n) + _vector_columns("v", n) + ["gap", "grad_norm"]
    rows = []
    for k, x in enumerate(traj.iterates):
        v = traj.velocities[k] if k < len(traj.velocities) else [None] * n
        rows.append([k, *x, *v, traj.gaps[k], traj.grad_norms[k]])
    return write_csv(path, header, rows)


def write_energy_csv(path: Path, series: EnergySeries, index_column: str = "k") -> Path:
    """
    k,E,dE,rhs,violated; row k holds E(k) and the step k → k+1.

    One row per energy value; a point without a step leaves dE and rhs blank.
    ODE series pass index_column="t".
    """
    rows = [
        [
            series.index[i],
            series.values[i],
            _blank_nan(series.decrements[i]),
            _blank_nan(series.bound_rhs[i]),
            series.violated[i],
        ]
        for i in range(len(series.values))
    ]
    return write_csv(path, [index_column] + ENERGY_COLUMNS[1:], rows)


def write_ode_csv(path: Path, sol: OdeSolution, obj: Objective) -> Path:
    """t,X0..,V0..,gap."""
    n = sol.positions.shape[1]
    header = ["t"] + _vector_columns("X", n) + _vector_columns("V", n) + ["gap"]
    rows = (
        [t, *X, *V, obj.gap(X)] for t, X, V in zip(sol.times, sol.positions, sol.velocities)
    )
    return write_csv(path, header, rows)


def write_deviation_csv(path: Path, rows: Iterable[Sequence[float]]) -> Path:
    """s,deviation_hr,deviation_lr."""
    return write_csv(path, DEVIATION_COLUMNS, rows)


def phase_row(report: PhaseReport) -> List[Any]:
    return [
        report.mu / report.lip,
        report.c,
        report.beta,
        report.h_value,
        report.ratio,
        report.regime.value,
        report.beta_c_closed,
        report.in_window,
    ]


def write_phase_csv(path: Path, reports: Iterable[PhaseReport]) -> Path:
    """mu_over_L,c,beta,h,ratio,regime,beta_c,in_window; beta_c is blank where h keeps its sign."""
    return write_csv(path, PHASE_COLUMNS, (phase_row(r) for r in reports))


def read_csv(path: Path) -> List[dict]:
    """Rows as dictionaries of strings."""
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))
