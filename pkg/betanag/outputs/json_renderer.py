"""
JSON summary renderer.

Writes summary.json: every outcome with its worst margin, per-cell
metadata used by the plot scripts, and totals.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict

from ..core.models import ExperimentSummary
from ..core.providers import OutputRenderer

logger = logging.getLogger(__name__)


def _finite_or_none(value: Any) -> Any:
    """JSON has no inf/nan; they become null."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _finite_or_none(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_finite_or_none(v) for v in value]
    return value


class JSONRenderer(OutputRenderer):
    """
    JSON summary renderer.
    """

    def __init__(self, config: Dict[str, Any]):
        """
        Config params:
            output_dir: Directory to write into (default: ./results)
            filename: Summary file name (default: summary.json)
            indent: JSON indentation (default: 2)
            schema_version: Summary schema version (default: "1.0")
        """
        super().__init__(config)
        self.output_dir = Path(config.get("output_dir", "./results"))
        self.filename = config.get("filename", "summary.json")
        self.indent = config.get("indent", 2)
        self.schema_version = config.get("schema_version", "1.0")

    def render(self, summary: ExperimentSummary) -> Path:
        data = self._generate_json(summary)

        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_path = self.output_dir / self.filename
        with open(output_path, "w", encoding="utf-8") as f:
            json.dump(_finite_or_none(data), f, indent=self.indent, ensure_ascii=False, default=str)

        logger.info(f"JSON summary saved to: {output_path}")
        return output_path

    def _generate_json(self, summary: ExperimentSummary) -> Dict[str, Any]:
        outcomes = summary.outcomes
        return {
            "$schema_version": self.schema_version,
            "generated_at": summary.generated_at.isoformat(),
            "exit_code": summary.exit_code,
            "metadata": summary.metadata,
            "outcomes": [o.to_dict() for o in outcomes],
            "cells": summary.cells,
            "statistics": {
                "total_outcomes": len(outcomes),
                "binding": sum(o.binding for o in outcomes),
                "advisory": sum(not o.binding for o in outcomes),
                "passed": sum(o.passed for o in outcomes),
                "binding_failures": len(summary.binding_failures),
            },
        }

    def validate_config(self) -> bool:
        if self.indent < 0:
            raise ValueError("indent must be non-negative")
        return True
