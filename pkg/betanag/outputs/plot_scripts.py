"""
Plot-script emitter.

Writes standalone matplotlib scripts next to the CSV artifacts of a run.
The package never imports matplotlib itself; the scripts do, when run.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Tuple

from ..utils.files import ARTIFACT_KINDS, list_artifacts

logger = logging.getLogger(__name__)

_HEADER = '''"""Generated by betanag plots. Run with: python {name}"""

import csv
import json
import math
from pathlib import Path

import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent
FILES = {files}


def read_rows(name):
    with open(HERE / name, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def summary_cells():
    path = HERE / "summary.json"
    if not path.exists():
        return {{}}
    with open(path, encoding="utf-8") as f:
        return {{cell["name"]: cell for cell in json.load(f).get("cells", [])}}

'''

_GAPS_BODY = '''
cells = summary_cells()
fig, ax = plt.subplots(figsize=(8, 5))
for name in FILES:
    rows = read_rows(name)
    k = [int(r["k"]) for r in rows]
    gap = [float(r["gap"]) for r in rows]
    line, = ax.semilogy(k, gap, label=name[len("trajectory_"):-4])
    cell = cells.get(name[len("trajectory_"):-4], {})
    scale, factor = cell.get("bound_scale"), cell.get("rate_factor")
    if scale and factor and cell.get("contracting"):
        ax.semilogy(k, [scale / factor**i for i in k], "--", color=line.get_color(), alpha=0.6)
ax.set_xlabel("k")
ax.set_ylabel("f(x_k) - f*")
ax.set_title("Function gap with rate-bound overlays (dashed)")
ax.legend(fontsize="small")
fig.tight_layout()
fig.savefig(HERE / "gaps.png", dpi=150)
'''

_ENERGY_BODY = '''
cells = summary_cells()
fig, ax = plt.subplots(figsize=(8, 5))
for name in FILES:
    rows = read_rows(name)
    k = [int(r["k"]) for r in rows]
    energy = [float(r["E"]) for r in rows]
    line, = ax.plot(k, energy, label=name[len("energy_"):-4])
    factor = cells.get(name[len("energy_"):-4], {}).get("energy_rate_factor")
    if factor and factor > 1 and energy:
        ax.plot(k, [energy[0] / factor**i for i in k], "--", color=line.get_color(), alpha=0.6)
ax.set_yscale("symlog", linthresh=1e-12)
ax.set_xlabel("k")
ax.set_ylabel("E(k)")
ax.set_title("Discrete energy against the geometric envelope (dashed)")
ax.legend(fontsize="small")
fig.tight_layout()
fig.savefig(HERE / "energy.png", dpi=150)
'''

_DEVIATION_BODY = '''
fig, ax = plt.subplots(figsize=(7, 5))
for name in FILES:
    rows = read_rows(name)
    s = [float(r["s"]) for r in rows]
    label = name[len("deviation_"):-4]
    ax.loglog(s, [float(r["deviation_hr"]) for r in rows], "o-", label=f"{label} high-res")
    ax.loglog(s, [float(r["deviation_lr"]) for r in rows], "s--", label=f"{label} low-res")
ax.set_xlabel("s")
ax.set_ylabel("max_k |x_k - X(k sqrt(s))|")
ax.set_title("Discrete-to-continuous deviation")
ax.legend(fontsize="small")
fig.tight_layout()
fig.savefig(HERE / "deviation.png", dpi=150)
'''

_PHASE_BODY = '''
rows = read_rows(FILES[0])
ratios = sorted({float(r["mu_over_L"]) for r in rows})
fig, axes = plt.subplots(1, len(ratios), figsize=(6 * len(ratios), 5), squeeze=False)
for ax, q in zip(axes[0], ratios):
    sub = [r for r in rows if float(r["mu_over_L"]) == q]
    cs = sorted({float(r["c"]) for r in sub})
    betas = sorted({float(r["beta"]) for r in sub})
    grid = [[math.nan] * len(cs) for _ in betas]
    for r in sub:
        value = float(r["ratio"]) - 1.0 / 6.0
        grid[betas.index(float(r["beta"]))][cs.index(float(r["c"]))] = max(min(value, 1.0), -1.0)
    mesh = ax.pcolormesh(cs, betas, grid, cmap="coolwarm", vmin=-1.0, vmax=1.0, shading="nearest")
    curve = sorted({(float(r["c"]), float(r["beta_c"])) for r in sub if r["beta_c"]})
    if curve:
        ax.plot([c for c, _ in curve], [b for _, b in curve], "k-", lw=2, label="beta_c")
        ax.legend(loc="lower right")
    ax.set_xlabel("c (s = 1/(cL))")
    ax.set_ylabel("beta")
    ax.set_title(f"A/B - 1/6, mu/L = {q:g}")
    fig.colorbar(mesh, ax=ax)
fig.tight_layout()
fig.savefig(HERE / "phase.png", dpi=150)
'''

# script name -> (artifact kind it reads, body)
PLOTS: Dict[str, Tuple[str, str]] = {
    "plot_gaps.py": ("trajectory", _GAPS_BODY),
    "plot_energy.py": ("energy", _ENERGY_BODY),
    "plot_deviation.py": ("deviation", _DEVIATION_BODY),
    "plot_phase.py": ("phase", _PHASE_BODY),
}


def emit_plots(directory: Path) -> List[Path]:
    """
    Write one script per plot whose CSVs exist in directory.

    Args:
        directory: Artifact directory of a run

    Returns:
        Paths of the written scripts; plots without input are skipped with a notice
    """
    directory = Path(directory)
    if not directory.is_dir():
        logger.warning(f"No artifact directory at {directory}; no plot scripts written")
        return []

    artifacts = list_artifacts(directory)
    written = []
    for name, (kind, body) in PLOTS.items():
        files = [p.name for p in artifacts.get(kind, [])]
        if not files:
            logger.warning(f"Skipping {name}: no {ARTIFACT_KINDS[kind]} in {directory}")
            continue
        script = _HEADER.format(name=name, files=json.dumps(files)) + body
        path = directory / name
        path.write_text(script, encoding="utf-8")
        logger.info(f"Plot script written: {path}")
        written.append(path)
    return written
