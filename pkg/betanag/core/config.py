"""
Configuration management for BetaNAG.

One YAML file fully determines an experiment: objective, method grid, ODE
settings, checks, phase grid and output directory.
"""

import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from .errors import BetaNAGError
from .models import Variant

logger = logging.getLogger(__name__)

OUTPUT_ROOT_ENV_VAR = "BETANAG_OUTPUT_ROOT"
BETA_CRITICAL_TOKEN = "beta_c"

BetaSpec = Union[float, str]


class ConfigValidationError(BetaNAGError):
    """Configuration validation error."""

    def __init__(self, errors: List[str]):
        self.errors = errors
        super().__init__(f"Configuration validation failed: {', '.join(errors)}")


@dataclass
class ObjectiveConfig:
    """Test function description."""

    kind: str
    x0: List[float]
    eigenvalues: Optional[List[float]] = None
    x_star: Optional[List[float]] = None
    dimension: Optional[int] = None
    mu: Optional[float] = None
    smoothness: float = 1.0
    seed: int = 0

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"kind": self.kind, "x0": list(self.x0)}
        if self.kind == "quadratic":
            result["eigenvalues"] = list(self.eigenvalues or [])
            if self.x_star is not None:
                result["x_star"] = list(self.x_star)
        else:
            result.update(
                dimension=self.dimension,
                mu=self.mu,
                smoothness=self.smoothness,
                seed=self.seed,
            )
        return result


@dataclass
class MethodGridConfig:
    """(β, s) grid for the discrete runs; s given directly or as c with s = 1/(cL)."""

    betas: List[BetaSpec]
    steps: List[float] = field(default_factory=list)
    c_values: List[float] = field(default_factory=list)
    max_iter: int = 500
    grad_tol: float = 0.0
    variant: str = Variant.SINGLE_VARIABLE.value

    def step_values(self, lip: float) -> List[float]:
        """Step sizes of the grid, c-values converted with the objective's L."""
        if self.steps:
            return [float(s) for s in self.steps]
        return [1.0 / (float(c) * lip) for c in self.c_values]

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "betas": list(self.betas),
            "max_iter": self.max_iter,
            "grad_tol": self.grad_tol,
            "variant": self.variant,
        }
        if self.steps:
            result["steps"] = list(self.steps)
        else:
            result["c_values"] = list(self.c_values)
        return result


@dataclass
class OdeConfig:
    """Integration and deviation-ladder settings."""

    t_end: float = 40.0
    integrator_step: Union[str, float] = "auto"
    deviation_horizon: float = 5.0
    deviation_steps: List[float] = field(default_factory=lambda: [1 / 40, 1 / 160, 1 / 640])
    deviation_betas: List[float] = field(default_factory=lambda: [0.0, 0.5, 1.0])
    hvp_fallback: bool = False

    @property
    def fixed_step(self) -> Optional[float]:
        """Integrator step when pinned in the config, None for the automatic policy."""
        if isinstance(self.integrator_step, str):
            return None
        return float(self.integrator_step)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t_end": self.t_end,
            "integrator_step": self.integrator_step,
            "deviation_horizon": self.deviation_horizon,
            "deviation_steps": list(self.deviation_steps),
            "deviation_betas": list(self.deviation_betas),
            "hvp_fallback": self.hvp_fallback,
        }


@dataclass
class PhaseGridConfig:
    """Phase-diagram grid; cells use L = 1, μ = μ/L, s = 1/c."""

    mu_over_l: List[float] = field(default_factory=lambda: [0.1])
    c_values: List[float] = field(default_factory=lambda: [4.0])
    betas: List[float] = field(default_factory=lambda: linspace(0.0, 1.0, 21))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu_over_l": list(self.mu_over_l),
            "c_values": list(self.c_values),
            "betas": list(self.betas),
        }


def linspace(start: float, stop: float, num: int) -> List[float]:
    """Evenly spaced grid including both ends, as plain floats."""
    if num < 1:
        return []
    if num == 1:
        return [float(start)]
    width = (stop - start) / (num - 1)
    return [float(start + i * width) for i in range(num - 1)] + [float(stop)]


def _parse_grid(value: Any) -> List[float]:
    """A grid is either a list or {start, stop, num}."""
    if isinstance(value, dict):
        return linspace(float(value["start"]), float(value["stop"]), int(value["num"]))
    if isinstance(value, (int, float)):
        return [float(value)]
    return [float(v) for v in value]


@dataclass
class ExperimentConfig:
    """Complete experiment configuration."""

    objective: ObjectiveConfig
    methods: MethodGridConfig
    checks: List[str]
    ode: OdeConfig = field(default_factory=OdeConfig)
    phase: PhaseGridConfig = field(default_factory=PhaseGridConfig)
    output_dir: Path = Path("./results")
    seed: int = 0
    reports: List[str] = field(default_factory=lambda: ["json", "markdown"])
    logging: Dict[str, Any] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    VALID_OBJECTIVE_KINDS = ["quadratic", "logsumexp"]
    VALID_CHECKS = ["energy-decrement", "continuous-bound", "deviation-ladder", "phase-sweep"]
    VALID_REPORTS = ["json", "markdown"]

    @classmethod
    def from_yaml(cls, path: Path) -> "ExperimentConfig":
        """
        Load configuration from YAML file.

        Args:
            path: Path to YAML config file

        Returns:
            ExperimentConfig instance

        Raises:
            FileNotFoundError: If config file doesn't exist
            ConfigValidationError: If config is invalid
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(path, encoding="utf-8") as f:
            try:
                data = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ConfigValidationError([f"Invalid YAML: {e}"]) from e

        if not isinstance(data, dict):
            raise ConfigValidationError(["Config root must be a mapping"])

        data = cls._expand_env_vars(data)
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        """
        Create config from dictionary.

        Raises:
            ConfigValidationError: If config is invalid
        """
        errors = cls._validate_structure(data)
        if errors:
            raise ConfigValidationError(errors)

        try:
            obj = data["objective"]
            objective = ObjectiveConfig(
                kind=str(obj["kind"]).lower(),
                x0=[float(v) for v in obj["x0"]],
                eigenvalues=(
                    [float(v) for v in obj["eigenvalues"]] if "eigenvalues" in obj else None
                ),
                x_star=(
                    [float(v) for v in obj["x_star"]] if obj.get("x_star") is not None else None
                ),
                dimension=int(obj["dimension"]) if "dimension" in obj else None,
                mu=float(obj["mu"]) if "mu" in obj else None,
                smoothness=float(obj.get("smoothness", 1.0)),
                seed=int(obj.get("seed", 0)),
            )

            m = data["methods"]
            methods = MethodGridConfig(
                betas=[cls._parse_beta(b) for b in (m.get("betas") or [])],
                steps=[float(s) for s in (m.get("steps") or [])],
                c_values=[float(c) for c in (m.get("c_values") or [])],
                max_iter=int(m.get("max_iter", 500)),
                grad_tol=float(m.get("grad_tol", 0.0)),
                variant=str(m.get("variant", Variant.SINGLE_VARIABLE.value)),
            )

            o = data.get("ode") or {}
            integrator_step = o.get("integrator_step", "auto")
            if not (isinstance(integrator_step, str) and integrator_step == "auto"):
                integrator_step = float(integrator_step)
            ode = OdeConfig(
                t_end=float(o.get("t_end", 40.0)),
                integrator_step=integrator_step,
                deviation_horizon=float(o.get("deviation_horizon", 5.0)),
                deviation_steps=_parse_grid(o.get("deviation_steps", [1 / 40, 1 / 160, 1 / 640])),
                deviation_betas=_parse_grid(o.get("deviation_betas", [0.0, 0.5, 1.0])),
                hvp_fallback=bool(o.get("hvp_fallback", False)),
            )

            p = data.get("phase") or {}
            phase = PhaseGridConfig(
                mu_over_l=_parse_grid(p.get("mu_over_l", [0.1])),
                c_values=_parse_grid(p.get("c_values", [4.0])),
                betas=_parse_grid(p.get("betas", {"start": 0.0, "stop": 1.0, "num": 21})),
            )
        except (TypeError, ValueError, KeyError) as e:
            raise ConfigValidationError([f"Malformed value: {e}"]) from e

        config = cls(
            objective=objective,
            methods=methods,
            checks=[str(c).lower() for c in data["checks"]],
            ode=ode,
            phase=phase,
            output_dir=resolve_output_dir(data.get("output_dir", "./results")),
            seed=int(data.get("seed", 0)),
            reports=[str(r).lower() for r in data.get("reports", ["json", "markdown"])],
            logging=dict(data.get("logging") or {}),
            metadata=dict(data.get("metadata") or {}),
        )

        errors = config.validate()
        if errors:
            raise ConfigValidationError(errors)

        return config

    @staticmethod
    def _parse_beta(value: Any) -> BetaSpec:
        if isinstance(value, str) and value.strip().lower() == BETA_CRITICAL_TOKEN:
            return BETA_CRITICAL_TOKEN
        return float(value)

    @classmethod
    def _validate_structure(cls, data: Dict[str, Any]) -> List[str]:
        """Validate config structure."""
        errors = []

        for section in ("objective", "methods", "checks"):
            if section not in data:
                errors.append(f"Missing required section: '{section}'")

        if "objective" in data:
            obj = data["objective"]
            if not isinstance(obj, dict):
                errors.append("'objective' must be a dictionary")
            else:
                if "kind" not in obj:
                    errors.append("'objective.kind' is required")
                if "x0" not in obj:
                    errors.append("'objective.x0' is required")
                kind = str(obj.get("kind", "")).lower()
                if kind == "quadratic" and "eigenvalues" not in obj:
                    errors.append("'objective.eigenvalues' is required for quadratic objectives")
                if kind == "logsumexp":
                    for key in ("dimension", "mu"):
                        if key not in obj:
                            errors.append(f"'objective.{key}' is required for logsumexp objectives")

        if "methods" in data:
            methods = data["methods"]
            if not isinstance(methods, dict):
                errors.append("'methods' must be a dictionary")
            else:
                if not methods.get("betas"):
                    errors.append("'methods.betas' must be a nonempty list")
                if not methods.get("steps") and not methods.get("c_values"):
                    errors.append("'methods.steps' or 'methods.c_values' must be a nonempty list")
                if methods.get("steps") and methods.get("c_values"):
                    errors.append("Give either 'methods.steps' or 'methods.c_values', not both")

        if "checks" in data and not isinstance(data["checks"], list):
            errors.append("'checks' must be a list")
        if "reports" in data and not isinstance(data["reports"], list):
            errors.append("'reports' must be a list")

        for section in ("ode", "phase", "logging", "metadata"):
            value = data.get(section)
            if value is not None and not isinstance(value, dict):
                errors.append(f"'{section}' must be a dictionary")

        return errors

    @classmethod
    def _expand_env_vars(cls, data: Any) -> Any:
        """Recursively expand environment variables in config."""
        if isinstance(data, dict):
            return {k: cls._expand_env_vars(v) for k, v in data.items()}
        elif isinstance(data, list):
            return [cls._expand_env_vars(item) for item in data]
        elif isinstance(data, str):
            return os.path.expandvars(data)
        return data

    def validate(self) -> List[str]:
        """
        Validate configuration semantically.

        Hypothesis violations (s > 1/L, window membership) are not errors;
        they make checks advisory at run time.

        Returns:
            List of validation errors (empty if valid)
        """
        errors = []

        if self.objective.kind not in self.VALID_OBJECTIVE_KINDS:
            errors.append(
                f"Unknown objective kind: '{self.objective.kind}'. "
                f"Valid: {', '.join(self.VALID_OBJECTIVE_KINDS)}"
            )
        errors.extend(self._validate_objective())

        if not self.checks:
            errors.append("'checks' must name at least one check")
        for check in self.checks:
            if check not in self.VALID_CHECKS:
                errors.append(f"Unknown check: '{check}'. Valid: {', '.join(self.VALID_CHECKS)}")

        for report in self.reports:
            if report not in self.VALID_REPORTS:
                errors.append(f"Unknown report: '{report}'. Valid: {', '.join(self.VALID_REPORTS)}")

        try:
            Variant(self.methods.variant)
        except ValueError:
            errors.append(
                f"Unknown variant: '{self.methods.variant}'. "
                f"Valid: {', '.join(v.value for v in Variant)}"
            )

        if self.methods.max_iter < 1:
            errors.append(f"'methods.max_iter' must be >= 1, got {self.methods.max_iter}")
        if self.methods.grad_tol < 0:
            errors.append(f"'methods.grad_tol' must be nonnegative, got {self.methods.grad_tol}")

        for c in self.methods.c_values:
            if not c > 0:
                errors.append(f"Invalid c value {c}: must be positive")

        bad_betas = [b for b in self.methods.betas if isinstance(b, float) and not 0.0 <= b <= 1.0]
        bad_steps = [s for s in self.methods.steps if not (math.isfinite(s) and s > 0)]
        for beta in self.methods.betas:
            for step in self.methods.steps:
                if beta in bad_betas or step in bad_steps:
                    errors.append(
                        f"Invalid (beta, s) pair ({beta}, {step}): "
                        "beta must lie in [0, 1] and s must be positive"
                    )
        if not self.methods.steps:
            for beta in bad_betas:
                errors.append(f"Invalid beta {beta}: must lie in [0, 1]")

        if not self.ode.t_end > 0:
            errors.append(f"'ode.t_end' must be positive, got {self.ode.t_end}")
        if self.ode.fixed_step is not None and not self.ode.fixed_step > 0:
            errors.append(
                f"'ode.integrator_step' must be positive or 'auto', got {self.ode.fixed_step}"
            )
        if not self.ode.deviation_horizon > 0:
            errors.append(
                f"'ode.deviation_horizon' must be positive, got {self.ode.deviation_horizon}"
            )
        for s in self.ode.deviation_steps:
            if not s > 0:
                errors.append(f"Invalid deviation step {s}: must be positive")
        for b in self.ode.deviation_betas:
            if not 0.0 <= b <= 1.0:
                errors.append(f"Invalid deviation beta {b}: must lie in [0, 1]")

        if "phase-sweep" in self.checks:
            if not (self.phase.mu_over_l and self.phase.c_values and self.phase.betas):
                errors.append("'phase' grids must be nonempty")
            for ratio in self.phase.mu_over_l:
                if not 0 < ratio <= 1:
                    errors.append(f"Invalid mu_over_l {ratio}: must lie in (0, 1]")
            for c in self.phase.c_values:
                if not c > 0:
                    errors.append(f"Invalid phase c value {c}: must be positive")
            for b in self.phase.betas:
                if not 0.0 <= b <= 1.0:
                    errors.append(f"Invalid phase beta {b}: must lie in [0, 1]")

        return errors

    def _validate_objective(self) -> List[str]:
        """Validate objective-specific parameters."""
        errors = []
        obj = self.objective

        if obj.kind == "quadratic":
            eig = obj.eigenvalues or []
            if not eig:
                errors.append("'objective.eigenvalues' must be nonempty")
            if any(not v > 0 for v in eig):
                errors.append("Quadratic eigenvalues must be positive")
            if obj.x_star is not None and len(obj.x_star) != len(eig):
                errors.append(
                    f"'objective.x_star' has dimension {len(obj.x_star)}, expected {len(eig)}"
                )
            if len(obj.x0) != len(eig):
                errors.append(f"'objective.x0' has dimension {len(obj.x0)}, expected {len(eig)}")

        if obj.kind == "logsumexp":
            if obj.dimension is None or obj.dimension < 1:
                errors.append("'objective.dimension' must be a positive integer")
            elif len(obj.x0) != obj.dimension:
                errors.append(
                    f"'objective.x0' has dimension {len(obj.x0)}, expected {obj.dimension}"
                )
            if obj.mu is None or not obj.mu > 0:
                errors.append("'objective.mu' must be positive")
            if not obj.smoothness > 0:
                errors.append("'objective.smoothness' must be positive")

        return errors

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary."""
        return {
            "objective": self.objective.to_dict(),
            "methods": self.methods.to_dict(),
            "ode": self.ode.to_dict(),
            "checks": list(self.checks),
            "phase": self.phase.to_dict(),
            "output_dir": str(self.output_dir),
            "seed": self.seed,
            "reports": list(self.reports),
            "logging": dict(self.logging),
            "metadata": dict(self.metadata),
        }

    def save(self, path: Path):
        """
        Save configuration to YAML file.

        Args:
            path: Output path for config file
        """
        with open(path, "w", encoding="utf-8") as f:
            yaml.safe_dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)


def resolve_output_dir(value: Union[str, Path]) -> Path:
    """Relative output directories are placed under BETANAG_OUTPUT_ROOT when it is set."""
    path = Path(value)
    root = os.getenv(OUTPUT_ROOT_ENV_VAR)
    if root and not path.is_absolute():
        return Path(root) / path
    return path


def load_config(path: Path) -> ExperimentConfig:
    """
    Load experiment configuration from file.

    Raises:
        FileNotFoundError: If config file doesn't exist
        ConfigValidationError: If config is invalid
    """
    return ExperimentConfig.from_yaml(path)


def validate_config(path: Path) -> List[str]:
    """
    Validate a configuration file without running it.

    Returns:
        List of validation errors (empty if valid)
    """
    try:
        load_config(path)
        return []
    except FileNotFoundError as e:
        return [str(e)]
    except ConfigValidationError as e:
        return e.errors
    except Exception as e:
        return [f"Configuration error: {e}"]


def create_default_config() -> ExperimentConfig:
    """Quadratic [1, 10], β ∈ {0, 1}, s = 1/40, energy-decrement check."""
    return ExperimentConfig(
        objective=ObjectiveConfig(kind="quadratic", eigenvalues=[1.0, 10.0], x0=[1.0, 1.0]),
        methods=MethodGridConfig(betas=[0.0, 1.0], steps=[0.025], max_iter=200),
        checks=["energy-decrement"],
        output_dir=resolve_output_dir("./results/minimal"),
    )
