"""Main CLI entry point for arcscatter."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, NoReturn

import click
import numpy as np
from scipy import linalg

from arcscatter import __version__
from arcscatter.cli.config import Command, ConfigError, RunConfig, SpectrumTarget, build_config, load_config_file, parse_overrides
from arcscatter.errors import ArcScatterError
from arcscatter.geometry import Arc
from arcscatter.models.core import OperatorMatrix

logger = logging.getLogger(__name__)

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


# ANSI color codes for terminal output
class Colors:
    """ANSI color codes for styled terminal output."""

    HEADER = "\033[95m"
    CYAN = "\033[96m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    RED = "\033[91m"
    BOLD = "\033[1m"
    DIM = "\033[2m"
    END = "\033[0m"


def color(text: str, *codes: str) -> str:
    """Apply color codes to text."""
    return "".join(codes) + str(text) + Colors.END


@click.group()
@click.version_option(version=__version__, prog_name="arcscatter")
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")
@click.option(
    "-c",
    "--config",
    type=click.Path(exists=True, path_type=Path),
    help="Path to a key=value configuration file.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, config: Path | None) -> None:
    """arcscatter - Second-kind integral equation solvers for scattering by open arcs."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["config"] = config
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _load(ctx: click.Context, command: Command, overrides: tuple[str, ...]) -> RunConfig:
    """Build the run configuration or exit with status 2."""
    try:
        path = ctx.obj.get("config")
        file_values = load_config_file(path) if path else {}
        config = build_config(command, file_values, parse_overrides(overrides))
        config.out_dir.mkdir(parents=True, exist_ok=True)
    except ConfigError as e:
        click.echo(f"Configuration error: {e}", err=True)
        raise SystemExit(EXIT_CONFIG) from e
    except OSError as e:
        click.echo(f"Configuration error: out_dir is not writable: {e}", err=True)
        raise SystemExit(EXIT_CONFIG) from e
    logger.debug(f"Run configuration: {config.model_dump(by_alias=True)}")
    return config


def _build_arc(config: RunConfig) -> Arc:
    try:
        return Arc.from_params(config.arc_family, config.arc_param1, config.arc_param2)
    except ArcScatterError as e:
        click.echo(f"Configuration error: invalid arc parameters (arc.param1/arc.param2): {e}", err=True)
        raise SystemExit(EXIT_CONFIG) from e


def _numerical_failure(e: Exception) -> NoReturn:
    click.echo(f"Numerical failure: {e}", err=True)
    raise SystemExit(EXIT_NUMERICAL) from e


def _emit(summary: dict[str, Any], output_format: str) -> None:
    if output_format == "json":
        click.echo(json.dumps(summary, indent=2, sort_keys=True, default=str))
        return
    for key in sorted(summary):
        click.echo(f"  {key}: {summary[key]}")


set_option = click.option("-s", "--set", "overrides", multiple=True, metavar="KEY=VALUE", help="Override a configuration key.")
format_option = click.option("-f", "--format", "output_format", type=click.Choice(["text", "json"]), default="text")


@cli.command()
@set_option
@format_option
@click.pass_context
def solve(ctx: click.Context, overrides: tuple[str, ...], output_format: str) -> None:
    """Solve one scattering problem and write density, field and far-field CSVs."""
    config = _load(ctx, Command.SOLVE, overrides)
    arc = _build_arc(config)

    from arcscatter import export
    from arcscatter.solver import PlaneWave, ScatteringProblem, evaluate_field, far_field
    from arcscatter.solver import solve as run_solve

    out = config.out_dir
    try:
        problem = ScatteringProblem(
            arc=arc,
            k=config.k,
            bc=config.bc,
            incident=PlaneWave.from_angle(config.incident_angle, config.incident_amplitude),
            size=config.size,
        )
        result = run_solve(problem, config.formulation, tol=config.tol, max_iter=config.max_iter, method=config.solver)
        export.write_series_csv(result.density, out / "density.csv")
        export.write_nodal_csv(result.physical_density, out / "density_nodal.csv")
        export.write_residuals_csv(result.residual_history, out / "residuals.csv")

        if config.field_points > 0:
            angles = 2 * np.pi * np.arange(config.field_points) / config.field_points
            points = config.field_radius * np.stack([np.cos(angles), np.sin(angles)], axis=-1)
            export.write_field_csv(points, evaluate_field(result, problem, points), out / "field.csv")
        if config.far_field_points > 0 and config.k > 0:
            angles = 2 * np.pi * np.arange(config.far_field_points) / config.far_field_points
            export.write_far_field_csv(angles, far_field(result, problem, angles), out / "far_field.csv")
    except (ArcScatterError, linalg.LinAlgError) as e:
        _numerical_failure(e)

    summary = {"command": "solve", "arc": arc.label, "k": config.k, "bc": config.bc.value, **result.to_dict()}
    export.write_summary_json(summary, out / "summary.json")
    if output_format == "text":
        click.echo(color(f"Solved {arc.label} at k={config.k}", Colors.BOLD, Colors.CYAN))
    _emit(summary, output_format)


def _target_matrix(config: RunConfig, arc: Arc) -> OperatorMatrix:
    from arcscatter.analysis import calderon_product, j0_tau, remainder_matrix
    from arcscatter.operators import assemble_N, assemble_S, j0_closed_form

    target = config.operator
    if target == SpectrumTarget.NS:
        return calderon_product(arc, config.k, config.size)
    if target == SpectrumTarget.S:
        return assemble_S(arc, config.k, config.size).matrix
    if target == SpectrumTarget.N:
        return assemble_N(arc, config.k, config.size).matrix
    if target == SpectrumTarget.J0:
        return j0_closed_form(config.size)
    if target == SpectrumTarget.J0_TAU:
        return j0_tau(arc, config.size)
    return remainder_matrix(arc, config.k, config.size).remainder


@cli.command()
@set_option
@format_option
@click.pass_context
def spectrum(ctx: click.Context, overrides: tuple[str, ...], output_format: str) -> None:
    """Compute eigenvalues of an assembled operator and report their clustering."""
    config = _load(ctx, Command.SPECTRUM, overrides)
    arc = _build_arc(config)

    from arcscatter import export
    from arcscatter.analysis import cluster_fraction, numerical_rank
    from arcscatter.analysis import spectrum as compute_spectrum
    from arcscatter.operators import classify_spectrum_point

    out = config.out_dir
    try:
        matrix = _target_matrix(config, arc)
        report = compute_spectrum(matrix, k=config.k)
        if config.operator == SpectrumTarget.K:
            report.singular_values = linalg.svdvals(matrix.entries)
            report.numerical_rank = numerical_rank(report.singular_values)
            rows = [(j, float(s)) for j, s in enumerate(report.singular_values)]
            export.write_csv(out / "singular_values.csv", ("j", "sigma"), rows)
    except (ArcScatterError, linalg.LinAlgError) as e:
        _numerical_failure(e)

    export.write_spectrum_csv(report.eigenvalues, out / "spectrum.csv")
    points = [classify_spectrum_point(value, config.sobolev_s) for value in report.eigenvalues]
    export.write_spectrum_points_csv(points, out / "spectrum_points.csv")

    summary = {
        "command": "spectrum",
        "arc": arc.label,
        "cluster_fraction": cluster_fraction(report.eigenvalues),
        **report.to_dict(),
    }
    export.write_summary_json(summary, out / "summary.json")
    _emit(summary, output_format)


@cli.command()
@set_option
@format_option
@click.pass_context
def sweep(ctx: click.Context, overrides: tuple[str, ...], output_format: str) -> None:
    """Sweep wavenumbers, recording iteration counts and spectral bounds."""
    config = _load(ctx, Command.SWEEP, overrides)
    arc = _build_arc(config)

    from arcscatter import export
    from arcscatter.processing import SweepConfig, SweepProcessor, SweepProgress, make_sweep_task
    from arcscatter.solver import PlaneWave

    task = make_sweep_task(
        arc,
        config.bc,
        config.size,
        tol=config.tol,
        max_iter=config.max_iter,
        incident=PlaneWave.from_angle(config.incident_angle, config.incident_amplitude),
        adaptive_size=config.adaptive_size,
    )

    def on_progress(progress: SweepProgress) -> None:
        if ctx.obj.get("verbose") and progress.processed:
            click.echo(f"  [{progress.processed}/{progress.total}] k={progress.current_k}", err=True)

    results = SweepProcessor(task).run(config.wavenumbers, SweepConfig(workers=config.workers, on_progress=on_progress))

    rows = []
    for r in results:
        m = r.measurement
        if m is None:
            rows.append((r.k, None, None, None, None, None, False, r.error))
        else:
            rows.append((r.k, m.size, m.ns_iterations, m.baseline_iterations, m.min_abs, m.max_abs, True, ""))
    columns = ("k", "N", "ns_iterations", "baseline_iterations", "min_abs", "max_abs", "success", "error")
    export.write_csv(config.out_dir / "sweep.csv", columns, rows)

    failed = [r for r in results if not r.success]
    summary = {
        "command": "sweep",
        "arc": arc.label,
        "bc": config.bc.value,
        "k_values": [r.k for r in results],
        "failed": len(failed),
    }
    export.write_summary_json(summary, config.out_dir / "summary.json")
    _emit(summary, output_format)
    if failed:
        click.echo(f"{len(failed)} sweep task(s) failed; first error: {failed[0].error}", err=True)
        raise SystemExit(EXIT_NUMERICAL)


@cli.command()
@set_option
@format_option
@click.option("--quick", is_flag=True, help="Skip the quadrature-based flat-arc oracles.")
@click.pass_context
def verify(ctx: click.Context, overrides: tuple[str, ...], output_format: str, quick: bool) -> None:
    """Run the operator identity suite and the flat-arc oracle suite."""
    config = _load(ctx, Command.VERIFY, overrides)

    from arcscatter import export
    from arcscatter.analysis import run_verification

    try:
        checks = run_verification(config.size, include_reference=not quick)
    except (ArcScatterError, linalg.LinAlgError) as e:
        _numerical_failure(e)

    rows = [(c.name, c.max_deviation, c.tolerance, c.passed) for c in checks]
    export.write_csv(config.out_dir / "verify.csv", ("name", "max_deviation", "tolerance", "passed"), rows)
    passed = sum(c.passed for c in checks)
    summary = {
        "command": "verify",
        "passed": passed,
        "total": len(checks),
        "checks": {c.name: {"max_deviation": c.max_deviation, "tolerance": c.tolerance, "passed": c.passed} for c in checks},
    }
    export.write_summary_json(summary, config.out_dir / "summary.json")

    if output_format == "json":
        click.echo(json.dumps(summary, indent=2, sort_keys=True))
    else:
        click.echo(color("Verification", Colors.BOLD, Colors.HEADER))
        for c in checks:
            status = color("PASS", Colors.GREEN) if c.passed else color("FAIL", Colors.RED, Colors.BOLD)
            click.echo(f"  {status} {c.name:<24} {c.max_deviation:10.3e} {color(f'(tol {c.tolerance:.0e})', Colors.DIM)}")
        click.echo(f"\n{passed}/{len(checks)} checks passed")

    if passed != len(checks):
        raise SystemExit(EXIT_NUMERICAL)


if __name__ == "__main__":
    cli()
