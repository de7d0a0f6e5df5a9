"""
Command-line interface for BetaNAG.

Commands:
- run: Run the checks of an experiment config
- sweep-phase: Write the phase diagram over a (mu/L, c, beta) grid
- plots: Emit plot scripts for an artifact directory
- init: Write an experiment config template

Exit status: 0 when no binding check failed, 1 when one did or on an
unexpected error, 2 on usage and config errors.
"""

import functools
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click
from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from . import __version__
from .core.config import ConfigValidationError, linspace, load_config, resolve_output_dir
from .core.logging import setup_logging
from .core.models import ExperimentSummary, PhaseReport
from .init_templates import get_init_template, template_names
from .utils.files import atomic_write, format_file_size, get_directory_size, list_artifacts

logger = logging.getLogger(__name__)


def handle_errors(func):
    """Usage errors keep click's exit status 2; anything else exits 1 with a message."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit):
            raise
        except Exception as e:
            logger.error(f"Command failed: {e}", exc_info=True)
            click.echo(f"\nError: {e}", err=True)
            sys.exit(1)

    return wrapper


def _configure_logging(
    ctx: click.Context, level: Optional[str] = None, json_output: bool = False
) -> None:
    opts = ctx.obj
    if opts["quiet"]:
        level = "warning"
    setup_logging(
        level=opts["log_level"] or level,
        log_file=opts["log_file"],
        json_output=opts["json_logs"] or json_output,
    )


def _show_progress(ctx: click.Context) -> bool:
    return not ctx.obj["quiet"] and sys.stderr.isatty()


def render_outcome_table(summary: ExperimentSummary, console: Console) -> None:
    """Outcome table after a run."""
    table = Table(title=f"Results in {summary.output_dir}")
    table.add_column("Check")
    table.add_column("Cell")
    table.add_column("Inequality")
    table.add_column("Binding")
    table.add_column("Status")
    table.add_column("Worst margin", justify="right")

    for o in summary.outcomes:
        if o.passed:
            status = "[green]pass[/green]"
        elif o.binding:
            status = "[bold red]FAIL[/bold red]"
        else:
            status = "[yellow]advisory fail[/yellow]"
        binding = "yes" if o.binding else "no"
        table.add_row(o.check, o.cell, o.inequality, binding, status, f"{o.worst_margin:.3e}")

    console.print(table)
    failures = len(summary.binding_failures)
    if failures:
        console.print(f"[bold red]{failures} binding check(s) failed[/bold red]")
    else:
        console.print("[green]No binding check failed[/green]")


def render_artifacts(directory: Path, console: Console) -> None:
    """One line counting the artifacts of a run by kind."""
    artifacts = list_artifacts(directory)
    if not artifacts:
        return
    kinds = ", ".join(f"{len(paths)} {kind}" for kind, paths in artifacts.items())
    console.print(f"Artifacts ({format_file_size(get_directory_size(directory))}): {kinds}")


def render_phase_table(reports: Sequence[PhaseReport], console: Console) -> None:
    """Critical β per (mu/L, c) row."""
    table = Table(title="Critical beta")
    table.add_column("mu/L", justify="right")
    table.add_column("c", justify="right")
    table.add_column("beta_c", justify="right")
    table.add_column("h(0)", justify="right")
    table.add_column("h(1)", justify="right")
    table.add_column("In window")

    seen = set()
    for r in reports:
        key = (r.mu / r.lip, r.c)
        if key in seen:
            continue
        seen.add(key)
        beta_c = "uniform" if r.beta_c_closed is None else f"{r.beta_c_closed:.8f}"
        table.add_row(
            f"{key[0]:.6g}",
            f"{key[1]:.6g}",
            beta_c,
            f"{r.h0:.4g}",
            f"{r.h1:.4g}",
            "yes" if r.in_window else "no",
        )

    console.print(table)


@click.group()
@click.version_option(__version__, prog_name="betanag")
@click.option(
    "--log-level",
    type=click.Choice(["debug", "info", "warning", "error", "critical"], case_sensitive=False),
    default=None,
    help="Log level (default: $BETANAG_LOG_LEVEL or info).",
)
@click.option(
    "--log-file",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also log to this file.",
)
@click.option("--json-logs", is_flag=True, help="Emit log records as JSON.")
@click.option("--quiet", "-q", is_flag=True, help="Only warnings and errors; no progress bars.")
@click.pass_context
def cli(
    ctx: click.Context,
    log_level: Optional[str],
    log_file: Optional[Path],
    json_logs: bool,
    quiet: bool,
):
    """BetaNAG - momentum between heavy ball and NAG-SC, checked against its bounds."""
    ctx.ensure_object(dict)
    ctx.obj.update(log_level=log_level, log_file=log_file, json_logs=json_logs, quiet=quiet)
    _configure_logging(ctx)


@cli.command()
@click.argument("config_path", type=click.Path(path_type=Path))
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Override output_dir.",
)
@click.pass_context
@handle_errors
def run(ctx: click.Context, config_path: Path, output_dir: Optional[Path]):
    """Run the checks of an experiment config."""
    from .core.runner import run_experiment

    try:
        config = load_config(config_path)
    except FileNotFoundError as e:
        raise click.UsageError(str(e))
    except ConfigValidationError as e:
        raise click.UsageError("Invalid config:\n  " + "\n  ".join(e.errors))

    if config.logging:
        _configure_logging(
            ctx,
            level=config.logging.get("level"),
            json_output=bool(config.logging.get("json", False)),
        )
    if output_dir is not None:
        config.output_dir = resolve_output_dir(output_dir)

    logger.info(f"Loaded config: {config_path}")
    summary = run_experiment(config, show_progress=_show_progress(ctx))

    if not ctx.obj["quiet"]:
        console = Console()
        render_outcome_table(summary, console)
        render_artifacts(summary.output_dir, console)
    ctx.exit(summary.exit_code)


def _grid(values: Sequence[float], option: str) -> List[float]:
    if not values:
        raise click.UsageError(f"{option} needs at least one value")
    return [float(v) for v in values]


@cli.command("sweep-phase")
@click.option(
    "--mu-over-l", "mu_over_l", type=float, multiple=True, help="mu/L values (repeatable)."
)
@click.option(
    "--c", "c_values", type=float, multiple=True, help="c values, s = 1/(cL) (repeatable)."
)
@click.option("--beta", "betas", type=float, multiple=True, help="beta values (repeatable).")
@click.option(
    "--beta-num",
    type=int,
    default=21,
    show_default=True,
    help="Evenly spaced betas on [0, 1] when --beta is absent.",
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("./results/phase"),
    show_default=True,
)
@click.pass_context
@handle_errors
def sweep_phase_command(
    ctx: click.Context,
    mu_over_l: Sequence[float],
    c_values: Sequence[float],
    betas: Sequence[float],
    beta_num: int,
    output_dir: Path,
):
    """Write phase_sweep.csv over the (mu/L, c, beta) grid."""
    from .outputs.csv_writer import write_phase_csv
    from .phase.report import sweep_phase

    ratios = _grid(mu_over_l, "--mu-over-l")
    cs = _grid(c_values, "--c")
    beta_grid = [float(b) for b in betas] or linspace(0.0, 1.0, beta_num)
    if not beta_grid:
        raise click.UsageError("--beta-num must be at least 1")
    if any(not 0 < q <= 1 for q in ratios):
        raise click.UsageError("--mu-over-l values must lie in (0, 1]")
    if any(not c > 0 for c in cs):
        raise click.UsageError("--c values must be positive")
    if any(not 0 <= b <= 1 for b in beta_grid):
        raise click.UsageError("--beta values must lie in [0, 1]")

    reports = sweep_phase(ratios, cs, beta_grid, progress=_show_progress(ctx))
    output_dir = resolve_output_dir(output_dir)
    path = write_phase_csv(output_dir / "phase_sweep.csv", reports)
    logger.info(f"Phase sweep written: {path}")

    if not ctx.obj["quiet"]:
        console = Console()
        render_phase_table(reports, console)
        console.print(f"Written: {path}")


@cli.command()
@click.argument("directory", type=click.Path(path_type=Path))
@handle_errors
def plots(directory: Path):
    """Emit plot scripts for the CSV artifacts in DIRECTORY."""
    from .outputs.plot_scripts import emit_plots

    written = emit_plots(directory)
    if not written:
        click.echo(f"No plot scripts written: no artifacts in {directory}")
        return
    for path in written:
        click.echo(f"Plot script: {path}")


@cli.command()
@click.argument("name", required=False, default="minimal", type=click.Choice(template_names()))
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Target file.",
)
@click.option("--force", is_flag=True, help="Overwrite an existing file.")
@handle_errors
def init(name: str, output: Optional[Path], force: bool):
    """Write an experiment config template."""
    output_path = output or Path(f"config_{name}.yaml")
    try:
        atomic_write(output_path, get_init_template(name), overwrite=force)
    except FileExistsError as e:
        raise click.UsageError(f"{e} (use --force to overwrite)")

    logger.info(f"Configuration template created: {output_path}")
    click.echo(f"Configuration template created: {output_path}")


def main():
    """Main CLI entry point."""
    load_dotenv()
    cli(obj={})


if __name__ == "__main__":
    main()
