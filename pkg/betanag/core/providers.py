"""
Base interfaces for experiment checks and output renderers.

A check turns an experiment into CheckOutcomes and CSV artifacts; a
renderer turns the finished ExperimentSummary into a report.
"""

import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List

from .errors import BetaNAGError
from .logging import LogContext
from .models import Cell, CheckOutcome, ExperimentSummary

if TYPE_CHECKING:
    from .runner import ExperimentContext

logger = logging.getLogger(__name__)


class Check(ABC):
    """
    Base class for checks.

    Subclasses list their cells and evaluate one cell at a time. A
    numerical failure inside a cell is recorded as a failed outcome and the
    remaining cells still run.
    """

    name: str = ""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize check.

        Args:
            config: Check-specific parameters
        """
        self.config = config

    def cells(self, context: "ExperimentContext") -> List[Cell]:
        """Cells this check evaluates; the method grid by default."""
        return context.cells

    @abstractmethod
    def run_cell(self, context: "ExperimentContext", cell: Cell) -> List[CheckOutcome]:
        """
        Evaluate one cell.

        Args:
            context: Experiment state shared by all checks
            cell: Grid point to evaluate

        Returns:
            Outcomes, one per inequality checked

        Raises:
            NotImplementedError: Must be implemented by subclass
        """
        raise NotImplementedError

    @abstractmethod
    def hypotheses_hold(self, context: "ExperimentContext", cell: Cell) -> bool:
        """Whether the cell satisfies the hypotheses that make this check binding."""
        raise NotImplementedError

    def run(self, context: "ExperimentContext") -> List[CheckOutcome]:
        """Evaluate every cell, converting numerical errors into failed outcomes."""
        outcomes: List[CheckOutcome] = []
        for cell in context.progress(self.cells(context), desc=self.name):
            with LogContext(check=self.name, cell=cell.name, beta=cell.beta, step=cell.step):
                try:
                    outcomes.extend(self.run_cell(context, cell))
                except BetaNAGError as e:
                    outcomes.append(self.failure(context, cell, e))
        return outcomes

    def failure(self, context: "ExperimentContext", cell: Cell, error: Exception) -> CheckOutcome:
        """Failed outcome for a cell whose computation raised."""
        try:
            binding = self.hypotheses_hold(context, cell)
        except BetaNAGError:
            binding = False
        log = logger.error if binding else logger.warning
        log(f"{self.name} failed on {cell.name}: {error}")
        return CheckOutcome(
            check=self.name,
            cell=cell.name,
            inequality="computation",
            binding=binding,
            passed=False,
            note=f"{type(error).__name__}: {error}",
        )

    def validate_config(self) -> bool:
        """
        Validate check configuration.

        Returns:
            True if config is valid

        Raises:
            ValueError: If config is invalid
        """
        return True


class OutputRenderer(ABC):
    """
    Base class for summary renderers.
    """

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize output renderer.

        Args:
            config: Renderer-specific configuration
        """
        self.config = config

    @abstractmethod
    def render(self, summary: ExperimentSummary) -> Path:
        """
        Render a finished experiment.

        Args:
            summary: Outcomes and cell metadata of the run

        Returns:
            Path to the written report

        Raises:
            NotImplementedError: Must be implemented by subclass
        """
        raise NotImplementedError

    def validate_config(self) -> bool:
        """
        Validate renderer configuration.

        Returns:
            True if config is valid

        Raises:
            ValueError: If config is invalid
        """
        return True
