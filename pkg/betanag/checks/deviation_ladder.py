"""
Discrete-to-continuous deviation ladder.

For each β, max_{k ≤ T/√s} ‖x_k - X(k√s)‖ against the high- and the
low-resolution ODE must shrink strictly as s walks down the ladder.
"""

import logging
import math
from typing import TYPE_CHECKING, List

import numpy as np

from ..continuous.deviation import deviation
from ..core.models import Cell, CheckOutcome
from ..core.providers import Check
from ..outputs.csv_writer import write_deviation_csv

if TYPE_CHECKING:
    from ..core.runner import ExperimentContext

logger = logging.getLogger(__name__)


def strictly_decreasing(values) -> bool:
    return bool(np.all(np.diff(values) < 0))


class DeviationLadderCheck(Check):
    """
    deviation-ladder: binding when every step of the ladder satisfies s ≤ 1/L.
    """

    name = "deviation-ladder"

    def cells(self, context: "ExperimentContext") -> List[Cell]:
        return [Cell(beta=float(b), step=math.nan) for b in context.config.ode.deviation_betas]

    def ladder(self, context: "ExperimentContext") -> List[float]:
        return sorted(context.config.ode.deviation_steps, reverse=True)

    def hypotheses_hold(self, context: "ExperimentContext", cell: Cell) -> bool:
        return max(self.ladder(context)) <= 1.0 / context.objective.lip * (1 + 1e-12)

    def run_cell(self, context: "ExperimentContext", cell: Cell) -> List[CheckOutcome]:
        horizon = context.config.ode.deviation_horizon
        rows = []
        for s in self.ladder(context):
            steps = int(math.floor(horizon / math.sqrt(s) + 1e-9))
            traj = context.trajectory(cell.beta, s, max_iter=max(steps, 1))
            hr = context.high_resolution(cell.beta, s, horizon)
            lr = context.low_resolution(s, horizon)
            rows.append([s, deviation(traj, hr, horizon), deviation(traj, lr, horizon)])
            _, dev_hr, dev_lr = rows[-1]
            logger.debug(f"{cell.name}, s={s}: deviation hr={dev_hr:.3e}, lr={dev_lr:.3e}")

        path = write_deviation_csv(context.artifact(f"deviation_{cell.name}.csv"), rows)
        hr_dev = [row[1] for row in rows]
        lr_dev = [row[2] for row in rows]
        context.record(cell, deviation_csv=path.name, deviation_hr=hr_dev, deviation_lr=lr_dev)

        binding = self.hypotheses_hold(context, cell)
        note = "" if binding else "ladder has s > 1/L: advisory"
        outcomes = []
        for label, values in (("high-resolution", hr_dev), ("low-resolution", lr_dev)):
            ok = strictly_decreasing(values)
            outcomes.append(
                CheckOutcome(
                    check=self.name,
                    cell=cell.name,
                    inequality=f"{label} deviation strictly decreasing in s",
                    binding=binding,
                    passed=ok,
                    worst_margin=float(np.max(np.diff(values))) if len(values) > 1 else 0.0,
                    violations=int(np.sum(np.diff(values) >= 0)),
                    artifacts=[path],
                    note=note,
                )
            )
        return outcomes
