"""
File utilities for BetaNAG.

Artifact discovery in run directories and safe writes for configs.
"""

import logging
from pathlib import Path
from typing import Dict, List

logger = logging.getLogger(__name__)

ARTIFACT_KINDS = {
    "trajectory": "trajectory_*.csv",
    "energy": "energy_*.csv",
    "ode": "ode_*.csv",
    "continuous_energy": "continuous_energy_*.csv",
    "deviation": "deviation_*.csv",
    "phase": "phase_sweep.csv",
    "plots": "plot_*.py",
}


def list_artifacts(directory: Path) -> Dict[str, List[Path]]:
    """
    Artifacts of a run directory grouped by kind.

    Returns:
        Mapping from kind (trajectory, energy, ode, ...) to sorted paths; empty kinds omitted
    """
    directory = Path(directory)
    if not directory.is_dir():
        return {}
    found = {kind: sorted(directory.glob(pattern)) for kind, pattern in ARTIFACT_KINDS.items()}
    return {kind: paths for kind, paths in found.items() if paths}


def format_file_size(size_bytes: float) -> str:
    """
    Format file size in human-readable format.

    Args:
        size_bytes: Size in bytes

    Returns:
        Human-readable size string
    """
    for unit in ["B", "KB", "MB", "GB", "TB"]:
        if size_bytes < 1024:
            return f"{size_bytes:.1f} {unit}"
        size_bytes /= 1024
    return f"{size_bytes:.1f} PB"


def get_directory_size(directory: Path) -> int:
    """Total size in bytes of the files below directory."""
    directory = Path(directory)
    if not directory.exists():
        return 0
    return sum(p.stat().st_size for p in directory.rglob("*") if p.is_file())


def atomic_write(
    file_path: Path, content: str, encoding: str = "utf-8", overwrite: bool = True
) -> Path:
    """
    Atomically write content to file (write to temp, then rename).

    Args:
        file_path: Target file path
        content: Content to write
        encoding: File encoding
        overwrite: Replace an existing file

    Returns:
        Path to written file

    Raises:
        FileExistsError: file_path exists and overwrite is False
    """
    file_path = Path(file_path)
    if file_path.exists() and not overwrite:
        raise FileExistsError(f"Destination already exists: {file_path}")
    file_path.parent.mkdir(parents=True, exist_ok=True)

    temp_path = file_path.parent / f".{file_path.name}.tmp"
    with open(temp_path, "w", encoding=encoding) as f:
        f.write(content)

    temp_path.replace(file_path)
    logger.debug(f"Wrote {file_path}")
    return file_path
