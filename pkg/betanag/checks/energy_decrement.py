"""
Discrete energy-decrement check.

Per cell: run the method, check E_β(k+1) - E_β(k) ≤ -r·min{1/6, A_β/B_β}·E_β(k+1)
at every step, and compare every gap with the discrete rate bound.
"""

import logging
from typing import TYPE_CHECKING, List

import numpy as np

from ..core.models import Cell, CheckOutcome, EnergySeries
from ..core.providers import Check
from ..energy.discrete import check_discrete_decrement
from ..methods.driver import observed_contraction
from ..outputs.csv_writer import write_energy_csv, write_trajectory_csv
from ..phase.rates import rate_bound

if TYPE_CHECKING:
    from ..core.runner import ExperimentContext

logger = logging.getLogger(__name__)

BOUND_RTOL = 1e-9


def _decrement_outcome(cell: Cell, series: EnergySeries, artifacts) -> CheckOutcome:
    violations = len(series.violations)
    return CheckOutcome(
        check=EnergyDecrementCheck.name,
        cell=cell.name,
        inequality="E(k+1) - E(k) <= -r*min(1/6, A/B)*E(k+1)",
        binding=series.binding,
        passed=violations == 0,
        worst_margin=series.worst_margin,
        violations=violations,
        artifacts=artifacts,
        note=series.note,
    )


class EnergyDecrementCheck(Check):
    """
    energy-decrement: discrete Lyapunov decrement and the gap rate bound.

    The decrement is binding for s ≤ 1/(4L); the gap bound is binding
    inside the step window.
    """

    name = "energy-decrement"

    def hypotheses_hold(self, context: "ExperimentContext", cell: Cell) -> bool:
        return cell.step <= 1.0 / (4.0 * context.objective.lip) * (1 + 1e-12)

    def run_cell(self, context: "ExperimentContext", cell: Cell) -> List[CheckOutcome]:
        obj = context.objective
        traj = context.trajectory(cell.beta, cell.step)
        beta = traj.config.effective_beta
        series = check_discrete_decrement(traj, beta, cell.step, obj)

        traj_csv = write_trajectory_csv(context.artifact(f"trajectory_{cell.name}.csv"), traj)
        energy_csv = write_energy_csv(context.artifact(f"energy_{cell.name}.csv"), series)
        artifacts = [traj_csv, energy_csv]

        r2 = float(np.sum((traj.iterates[0] - obj.minimizer) ** 2))
        bound = rate_bound(beta, cell.step, obj.mu, obj.lip, 0, r2)
        ks = np.arange(len(traj.gaps))
        if bound.vacuous:
            bounds = np.full(len(ks), np.inf)
        else:
            bounds = bound.value / bound.rate_factor**ks
        excess = traj.gaps - bounds * (1 + BOUND_RTOL)
        gap_violations = int(np.sum(excess > 0))
        gap_binding = bound.in_window and not bound.vacuous
        if not bound.in_window:
            gap_note = f"s={cell.step} outside the step window: advisory"
        elif not bound.contracting:
            gap_note = f"rate factor {bound.rate_factor:.6f} <= 1: the bound does not contract"
        else:
            gap_note = ""

        context.record(
            cell,
            trajectory_csv=traj_csv.name,
            energy_csv=energy_csv.name,
            bound_scale=bound.value,
            rate_factor=bound.rate_factor,
            expanded_rate_factor=bound.expanded_rate_factor,
            contracting=bound.contracting,
            regime=bound.regime.value,
            energy_rate_factor=1.0 + series.extras["rate"],
            observed_contraction=observed_contraction(traj.gaps),
            initial_energy=series.extras["initial_energy"],
            initial_bound=series.extras["initial_bound"],
            final_gap=traj.final_gap,
        )
        logger.debug(
            f"{cell.name}: worst decrement margin {series.worst_margin:.3e}, "
            f"rate factor {bound.rate_factor:.6f} ({bound.regime.value})"
        )

        return [
            _decrement_outcome(cell, series, artifacts),
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="f(x_k) - f* <= G*C*L*|x0 - x*|^2 / rate_factor^k",
                binding=gap_binding,
                passed=gap_violations == 0,
                worst_margin=float(np.max(excess)) if len(excess) else 0.0,
                violations=gap_violations,
                artifacts=[traj_csv],
                note=gap_note,
            ),
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="E(0) <= C*L*|x0 - x*|^2",
                binding=series.binding,
                passed=bool(series.extras["initial_bound_holds"]),
                worst_margin=series.extras["initial_energy"] - series.extras["initial_bound"],
                violations=0 if series.extras["initial_bound_holds"] else 1,
                note=series.note,
            ),
        ]
