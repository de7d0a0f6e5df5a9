"""
Experiment runner for BetaNAG.

Builds the objective and the (β, s) grid from an ExperimentConfig, runs
every requested check over the grid and renders the summary.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..objectives.base import Objective
from .config import BETA_CRITICAL_TOKEN, ExperimentConfig
from .errors import BetaNAGError
from .logging import log_execution_time
from .models import Cell, CheckOutcome, ExperimentSummary, MethodConfig, OdeSolution, Trajectory
from .providers import Check, OutputRenderer

logger = logging.getLogger(__name__)


class ExperimentContext:
    """
    State shared by the checks of one experiment.

    Trajectories and ODE solutions are cached per (β, s) so checks that
    need the same run do not repeat it.
    """

    def __init__(
        self,
        config: ExperimentConfig,
        objective: Objective,
        cells: List[Cell],
        show_progress: bool = False,
    ):
        self.config = config
        self.objective = objective
        self.cells = cells
        self.output_dir = Path(config.output_dir)
        self.show_progress = show_progress
        self.records: Dict[str, Dict[str, Any]] = {}
        self._trajectories: Dict[Tuple[float, float, int], Trajectory] = {}
        self._solutions: Dict[Tuple[str, float, float, float], OdeSolution] = {}

    @property
    def x0(self) -> np.ndarray:
        return self.objective.check_point(self.config.objective.x0, "x0")

    def progress(self, items: Iterable, desc: str) -> Iterable:
        """Wrap items in a progress bar when progress display is on."""
        return tqdm(list(items), desc=desc, disable=not self.show_progress, leave=False)

    def artifact(self, filename: str) -> Path:
        """Path of an artifact inside the output directory."""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / filename

    def method_config(
        self, beta: float, step: float, max_iter: Optional[int] = None
    ) -> MethodConfig:
        methods = self.config.methods
        return MethodConfig(
            beta=beta,
            step=step,
            max_iter=max_iter or methods.max_iter,
            grad_tol=methods.grad_tol,
            variant=methods.variant,
        )

    def trajectory(self, beta: float, step: float, max_iter: Optional[int] = None) -> Trajectory:
        """Discrete run from the configured x0, cached."""
        from ..methods.driver import run

        config = self.method_config(beta, step, max_iter)
        key = (config.beta, config.step, config.max_iter)
        if key not in self._trajectories:
            self._trajectories[key] = run(config, self.objective, self.x0)
        return self._trajectories[key]

    def high_resolution(self, beta: float, step: float, t_end: float) -> OdeSolution:
        """High-resolution ODE solution from the configured x0, cached."""
        from ..continuous.integrator import solve_high_resolution

        key = ("high", beta, step, t_end)
        if key not in self._solutions:
            ode = self.config.ode
            self._solutions[key] = solve_high_resolution(
                self.objective,
                beta,
                step,
                self.x0,
                t_end,
                h=ode.fixed_step,
                fallback=ode.hvp_fallback,
            )
        return self._solutions[key]

    def low_resolution(self, step: float, t_end: float) -> OdeSolution:
        """Low-resolution ODE solution from the configured x0, cached."""
        from ..continuous.integrator import solve_low_resolution

        key = ("low", 0.0, step, t_end)
        if key not in self._solutions:
            self._solutions[key] = solve_low_resolution(
                self.objective, step, self.x0, t_end, h=self.config.ode.fixed_step
            )
        return self._solutions[key]

    def record(self, cell: Cell, **fields: Any) -> None:
        """Attach metadata for a cell to the summary."""
        entry = self.records.setdefault(cell.name, cell.to_dict())
        entry.update(fields)


def resolve_cells(
    config: ExperimentConfig, objective: Objective
) -> Tuple[List[Cell], List[CheckOutcome]]:
    """
    Expand the method grid into cells.

    The "beta_c" token becomes the critical β of each step size. A step
    without one yields an advisory failed outcome instead of a cell.
    """
    from ..phase.critical import beta_critical_closed

    cells: List[Cell] = []
    unresolved: List[CheckOutcome] = []
    for step in config.methods.step_values(objective.lip):
        for beta in config.methods.betas:
            if beta != BETA_CRITICAL_TOKEN:
                cells.append(Cell(beta=float(beta), step=step))
                continue
            try:
                beta_c = beta_critical_closed(step, objective.mu, objective.lip)
            except BetaNAGError as e:
                logger.warning(f"No critical beta at s={step}: {e}")
                unresolved.append(
                    CheckOutcome(
                        check="grid",
                        cell=Cell(
                            beta=float("nan"), step=step, beta_label=BETA_CRITICAL_TOKEN
                        ).name,
                        inequality="beta_c",
                        binding=False,
                        passed=False,
                        note=str(e),
                    )
                )
                continue
            logger.debug(f"beta_c at s={step}: {beta_c}")
            cells.append(Cell(beta=beta_c, step=step, beta_label=BETA_CRITICAL_TOKEN))
    return cells, unresolved


class ExperimentRunner:
    """
    Runs the checks an ExperimentConfig requests.
    """

    def __init__(self, config: ExperimentConfig, show_progress: bool = False):
        """
        Initialize experiment runner.

        Args:
            config: Experiment configuration
            show_progress: Display tqdm bars over cells
        """
        self.config = config
        self.show_progress = show_progress
        self.objective: Optional[Objective] = None
        self.checks: List[Check] = []
        self.renderers: List[OutputRenderer] = []

    def setup(self):
        """
        Build the objective, the checks and the report renderers.

        Raises:
            BetaNAGError: Objective construction fails
            ValueError: Unknown check or report
        """
        from ..checks.factory import get_check
        from ..objectives.factory import build_objective
        from ..outputs.factory import get_output_renderer

        logger.info("Setting up experiment...")
        self.objective = build_objective(self.config.objective)
        self.checks = [get_check(name, self.config.to_dict()) for name in self.config.checks]
        self.renderers = [
            get_output_renderer(name, {"output_dir": self.config.output_dir})
            for name in self.config.reports
        ]
        logger.info(f"Checks: {', '.join(self.config.checks)}")

    def validate(self) -> bool:
        """
        Validate all components.

        Raises:
            ValueError: If any component is invalid
        """
        for check in self.checks:
            if not check.validate_config():
                raise ValueError(f"Check '{check.name}' config is invalid")
        for renderer in self.renderers:
            if not renderer.validate_config():
                raise ValueError(f"Renderer {type(renderer).__name__} config is invalid")
        return True

    @log_execution_time(logger)
    def run(self) -> ExperimentSummary:
        """
        Run every check and render the summary.

        Returns:
            ExperimentSummary; its exit_code is nonzero iff a binding check failed
        """
        if self.objective is None:
            self.setup()

        cells, unresolved = resolve_cells(self.config, self.objective)
        context = ExperimentContext(self.config, self.objective, cells, self.show_progress)
        summary = ExperimentSummary(
            output_dir=context.output_dir,
            outcomes=list(unresolved),
            metadata={
                "objective": self.objective.name,
                "mu": self.objective.mu,
                "lip": self.objective.lip,
                "checks": list(self.config.checks),
                "seed": self.config.seed,
                **self.config.metadata,
            },
        )
        logger.info(
            f"Running {len(self.checks)} checks over {len(cells)} cells into {context.output_dir}"
        )

        for check in self.checks:
            logger.info(f"Check: {check.name}")
            outcomes = check.run(context)
            summary.outcomes.extend(outcomes)
            failed = [o for o in outcomes if o.failed_binding]
            if failed:
                logger.error(f"{check.name}: {len(failed)} binding failures")
            else:
                logger.info(f"{check.name}: {len(outcomes)} outcomes, no binding failures")

        summary.cells = list(context.records.values())
        for renderer in self.renderers:
            path = renderer.render(summary)
            logger.info(f"Report written: {path}")

        return summary


def run_experiment(config: ExperimentConfig, show_progress: bool = False) -> ExperimentSummary:
    """
    Run an experiment end to end.

    Args:
        config: Experiment configuration
        show_progress: Display tqdm bars over cells

    Returns:
        ExperimentSummary with outcomes and artifact paths
    """
    runner = ExperimentRunner(config, show_progress=show_progress)
    runner.setup()
    runner.validate()
    return runner.run()
