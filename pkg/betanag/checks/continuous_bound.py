"""
Continuous-time checks along the high-resolution ODE.

Per cell: the gap bound ((3+(2-β)²)/(2s))‖x_0-x*‖²e^{-√μt/4}, the energy
decay E(t) ≤ E(0)e^{-√μt/4} and Δ_β ≥ 0.
"""

import logging
from typing import TYPE_CHECKING, List

from ..continuous.bounds import continuous_rate_check
from ..core.models import Cell, CheckOutcome
from ..core.providers import Check
from ..energy.continuous import check_continuous_decay
from ..outputs.csv_writer import write_energy_csv, write_ode_csv

if TYPE_CHECKING:
    from ..core.runner import ExperimentContext

logger = logging.getLogger(__name__)

DELTA_TOL = 1e-12


class ContinuousBoundCheck(Check):
    """
    continuous-bound: binding for s ≤ 1/L.
    """

    name = "continuous-bound"

    def hypotheses_hold(self, context: "ExperimentContext", cell: Cell) -> bool:
        return cell.step <= 1.0 / context.objective.lip * (1 + 1e-12)

    def run_cell(self, context: "ExperimentContext", cell: Cell) -> List[CheckOutcome]:
        obj = context.objective
        sol = context.high_resolution(cell.beta, cell.step, context.config.ode.t_end)

        report = continuous_rate_check(sol, obj, cell.beta, cell.step)
        series = check_continuous_decay(sol, cell.beta, cell.step, obj)

        ode_csv = write_ode_csv(context.artifact(f"ode_{cell.name}.csv"), sol, obj)
        energy_csv = write_energy_csv(
            context.artifact(f"continuous_energy_{cell.name}.csv"), series, index_column="t"
        )

        envelope_violations = series.extras["envelope_violations"]
        min_delta = series.extras["min_delta"]
        context.record(
            cell,
            ode_csv=ode_csv.name,
            continuous_energy_csv=energy_csv.name,
            continuous_constant=report.constant,
            continuous_worst_ratio=report.worst_ratio,
        )
        logger.debug(f"{cell.name}: worst gap/bound ratio {report.worst_ratio:.6g}")

        return [
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="f(X(t)) - f* <= ((3+(2-beta)^2)/(2s))|x0 - x*|^2 exp(-sqrt(mu) t/4)",
                binding=report.binding,
                passed=report.passed,
                worst_margin=report.worst_ratio - 1.0,
                violations=0 if report.passed else 1,
                artifacts=[ode_csv],
                note=report.note,
            ),
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="E(t) <= E(0) exp(-sqrt(mu) t/4)",
                binding=series.binding,
                passed=envelope_violations == 0,
                worst_margin=float((series.values - series.extras["envelope"]).max()),
                violations=envelope_violations,
                artifacts=[energy_csv],
                note=series.note,
            ),
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="dE/dt <= -(sqrt(mu)/4) E",
                binding=series.binding,
                passed=len(series.violations) == 0,
                worst_margin=series.worst_margin,
                violations=len(series.violations),
                artifacts=[energy_csv],
                note=series.note,
            ),
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="Delta_beta >= 0",
                binding=series.binding,
                passed=min_delta >= -DELTA_TOL,
                worst_margin=-min_delta,
                violations=0 if min_delta >= -DELTA_TOL else 1,
                note=series.note,
            ),
        ]
