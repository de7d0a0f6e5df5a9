"""
Phase-diagram sweep.

Writes phase_sweep.csv over the configured (μ/L, c, β) grid and, per
(μ/L, c) row, checks that sign(h) = sign(A_β/B_β - 1/6), h(0) ≤ 0 ≤ h(1),
h' ≥ 0 on the β grid and that both critical-β computations agree.
"""

import logging
from collections import OrderedDict
from typing import TYPE_CHECKING, Dict, List

from ..core.models import Cell, CheckOutcome, PhaseReport
from ..core.providers import Check
from ..outputs.csv_writer import write_phase_csv
from ..phase.coefficients import SUPERCRITICAL_THRESHOLD, h_derivative
from ..phase.report import regime_flips, sweep_phase

if TYPE_CHECKING:
    from ..core.runner import ExperimentContext

logger = logging.getLogger(__name__)

SIGN_TOL = 1e-12
BETA_C_AGREEMENT = 1e-8


def row_label(mu_over_l: float, c: float) -> str:
    return f"mu_over_L{mu_over_l:.6g}_c{c:.6g}"


def row_violations(reports: List[PhaseReport]) -> List[str]:
    """Failed properties of one (μ/L, c) row, empty when all hold."""
    failures = []
    first = reports[0]
    s, mu, lip = first.step, first.mu, first.lip

    incoherent = [
        r.beta
        for r in reports
        if abs(r.h_value) > SIGN_TOL
        and abs(r.ratio - SUPERCRITICAL_THRESHOLD) > SIGN_TOL
        and (r.h_value > 0) != (r.ratio > SUPERCRITICAL_THRESHOLD)
    ]
    if incoherent:
        failures.append(f"sign(h) != sign(A/B - 1/6) at beta={incoherent}")
    if first.h0 > SIGN_TOL:
        failures.append(f"h(0)={first.h0:.6g} > 0")
    if first.h1 < -SIGN_TOL:
        failures.append(f"h(1)={first.h1:.6g} < 0")
    decreasing = [r.beta for r in reports if h_derivative(r.beta, s, mu, lip) < -SIGN_TOL]
    if decreasing:
        failures.append(f"h' < 0 at beta={decreasing}")
    if first.beta_c_closed is not None and first.beta_c_bisect is not None:
        gap = abs(first.beta_c_closed - first.beta_c_bisect)
        if gap > BETA_C_AGREEMENT:
            failures.append(f"closed and bisection beta_c differ by {gap:.3g}")
    if len(regime_flips(reports)) > 1:
        failures.append(f"{len(regime_flips(reports))} regime flips")
    return failures


class PhaseSweepCheck(Check):
    """
    phase-sweep: rows are binding when c lies in the step window.
    """

    name = "phase-sweep"

    def __init__(self, config):
        super().__init__(config)
        self._rows: Dict[str, List[PhaseReport]] = OrderedDict()

    def run(self, context: "ExperimentContext") -> List[CheckOutcome]:
        phase = context.config.phase
        reports = sweep_phase(
            phase.mu_over_l, phase.c_values, phase.betas, progress=context.show_progress
        )
        self._path = write_phase_csv(context.artifact("phase_sweep.csv"), reports)
        logger.info(f"Phase sweep: {len(reports)} cells written to {self._path}")

        self._rows.clear()
        for report in reports:
            self._rows.setdefault(row_label(report.mu / report.lip, report.c), []).append(report)
        return super().run(context)

    def cells(self, context: "ExperimentContext") -> List[Cell]:
        return [
            Cell(beta=float("nan"), step=reports[0].step, label=label)
            for label, reports in self._rows.items()
        ]

    def hypotheses_hold(self, context: "ExperimentContext", cell: Cell) -> bool:
        return self._rows[cell.name][0].in_window

    def run_cell(self, context: "ExperimentContext", cell: Cell) -> List[CheckOutcome]:
        reports = self._rows[cell.name]
        first = reports[0]
        failures = row_violations(reports)
        binding = first.in_window
        context.record(
            cell,
            mu_over_L=first.mu / first.lip,
            c=first.c,
            beta_c=first.beta_c_closed,
            beta_c_bisect=first.beta_c_bisect,
            roots=list(first.roots),
            h0=first.h0,
            h1=first.h1,
            regime_flips=regime_flips(reports),
            in_window=first.in_window,
        )
        notes = failures or ([] if binding else ["c outside the step window: advisory"])
        return [
            CheckOutcome(
                check=self.name,
                cell=cell.name,
                inequality="sign(h) = sign(A/B - 1/6), h(0) <= 0 <= h(1), h' >= 0, closed = bisection",
                binding=binding,
                passed=not failures,
                worst_margin=max(first.h0, -first.h1),
                violations=len(failures),
                artifacts=[self._path],
                note="; ".join(notes),
            )
        ]
