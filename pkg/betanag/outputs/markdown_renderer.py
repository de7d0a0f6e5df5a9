"""
Markdown summary renderer.

Writes summary.md, a human-readable table of outcomes grouped by check.
"""

import logging
from itertools import groupby
from pathlib import Path
from typing import Any, Dict, List

from ..core.models import CheckOutcome, ExperimentSummary
from ..core.providers import OutputRenderer

logger = logging.getLogger(__name__)


def _status(outcome: CheckOutcome) -> str:
    if outcome.passed:
        return "pass"
    return "FAIL" if outcome.binding else "fail (advisory)"


class MarkdownRenderer(OutputRenderer):
    """
    Markdown summary renderer.
    """

    def __init__(self, config: Dict[str, Any]):
        """
        Config params:
            output_dir: Directory to write into (default: ./results)
            filename: Summary file name (default: summary.md)
            include_metadata: Include the metadata table (default: True)
        """
        super().__init__(config)
        self.output_dir = Path(config.get("output_dir", "./results"))
        self.filename = config.get("filename", "summary.md")
        self.include_metadata = config.get("include_metadata", True)

    def render(self, summary: ExperimentSummary) -> Path:
        content = self._generate_markdown(summary)

        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_path = self.output_dir / self.filename
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(content)

        logger.info(f"Markdown summary saved to: {output_path}")
        return output_path

    def _generate_markdown(self, summary: ExperimentSummary) -> str:
        lines: List[str] = ["# Experiment Summary", ""]

        if self.include_metadata:
            lines.append("| Property | Value |")
            lines.append("|----------|-------|")
            for key, value in summary.metadata.items():
                lines.append(f"| {key} | {value} |")
            lines.append(f"| binding failures | {len(summary.binding_failures)} |")
            lines.append("")

        by_check = groupby(sorted(summary.outcomes, key=lambda o: o.check), key=lambda o: o.check)
        for check, outcomes in by_check:
            lines.append(f"## {check}")
            lines.append("")
            lines.append("| Cell | Inequality | Binding | Status | Worst margin | Violations | Note |")
            lines.append("|------|------------|---------|--------|--------------|------------|------|")
            for o in outcomes:
                binding = "yes" if o.binding else "no"
                lines.append(
                    f"| {o.cell} | {o.inequality} | {binding} | {_status(o)} "
                    f"| {o.worst_margin:.3e} | {o.violations} | {o.note or '-'} |"
                )
            lines.append("")

        lines.append("---")
        lines.append("")
        generated = summary.generated_at.strftime("%Y-%m-%d %H:%M:%S")
        lines.append(f"*Generated by betanag at {generated}*")
        return "\n".join(lines) + "\n"
