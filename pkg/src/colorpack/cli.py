"""CLI entrypoint for colorpack.

Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 solver invariant
breach, 4 oracle item limit exceeded.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import NoReturn

import click
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from colorpack.bench import run_bench
from colorpack.config import Settings, load_settings
from colorpack.errors import (
    GenerationError,
    InstanceParseError,
    OracleLimitError,
    SolverInvariantError,
    StuckAlternationError,
)
from colorpack.generator import PRNG_ALGORITHM, GenSpec, Skew, generate
from colorpack.instance_io import (
    PackingFormat,
    parse_instance,
    parse_packing,
    serialize_instance,
    serialize_packing,
)
from colorpack.models import CaseTag, Instance, Packing
from colorpack.oracle import optimal_bins
from colorpack.predictor import predicted_bins, uncorrected_even_total
from colorpack.solver import solve
from colorpack.validation import validate_packing

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_SOLVER = 3
EXIT_ORACLE_LIMIT = 4

console = Console()
err_console = Console(stderr=True)

log = logging.getLogger("colorpack")


def _fail(message: str, code: int) -> NoReturn:
    err_console.print(f"[red]{escape(message)}[/red]")
    sys.exit(code)


def _read_instance(path: str) -> Instance:
    try:
        return parse_instance(Path(path).read_bytes())
    except InstanceParseError as exc:
        _fail(f"Parse error in {path}: {exc}", EXIT_PARSE)


def _solve_checked(instance: Instance) -> Packing:
    """Solve and self-validate; a failure here is a solver bug."""
    try:
        packing = solve(instance)
    except StuckAlternationError as exc:
        _fail(f"Solver invariant breached: {exc}", EXIT_SOLVER)
    report = validate_packing(instance, packing)
    if not report.valid:
        for violation in report.violations:
            err_console.print(f"  • {escape(violation.describe(instance.colors))}")
        _fail("Solver produced an invalid packing", EXIT_SOLVER)
    return packing


@click.group()
@click.option(
    "--config",
    "config_path",
    default=None,
    type=click.Path(),
    help="Path to YAML config file. Default: ./colorpack.yaml",
)
@click.option(
    "--verbose",
    is_flag=True,
    help="Enable debug logging.",
)
@click.pass_context
def main(ctx: click.Context, config_path: str | None, verbose: bool) -> None:
    """Optimal colored bin packing for zero-weight and unit-weight items."""
    # --- Logging ---
    log_level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=log_level,
        format="%(message)s",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False, console=err_console)],
    )
    log.setLevel(log_level)

    # --- Load config ---
    try:
        ctx.obj = load_settings(config_path)
    except (yaml.YAMLError, ValidationError) as exc:
        _fail(f"Invalid config: {exc}", EXIT_PARSE)


@main.command("solve")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in PackingFormat]),
    default=None,
    help="Output format. Default: text (or the config file's format).",
)
@click.pass_obj
def solve_cmd(settings: Settings, instance_path: str, fmt: str | None) -> None:
    """Pack an instance optimally and print the packing."""
    instance = _read_instance(instance_path)
    packing = _solve_checked(instance)
    output_format = PackingFormat(fmt) if fmt else settings.format

    if output_format is PackingFormat.STRUCTURED:
        click.echo(serialize_packing(packing, PackingFormat.STRUCTURED))
    else:
        click.echo(serialize_packing(packing))
        click.echo(f"bin_count: {packing.bin_count}")


@main.command("verify")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("packing_path", type=click.Path(exists=True, dir_okay=False))
def verify_cmd(instance_path: str, packing_path: str) -> None:
    """Check a packing file against an instance."""
    instance = _read_instance(instance_path)
    try:
        packing = parse_packing(Path(packing_path).read_bytes(), instance)
    except InstanceParseError as exc:
        _fail(f"Parse error in {packing_path}: {exc}", EXIT_PARSE)

    report = validate_packing(instance, packing)
    if report.valid:
        click.echo(f"valid: {packing.bin_count} bins")
        return

    click.echo(f"invalid: {len(report.violations)} violation(s)")
    for violation in report.violations:
        click.echo(f"  {violation.kind.value}: {violation.describe(instance.colors)}")
    sys.exit(EXIT_INVALID)


@main.command("predict")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
def predict_cmd(instance_path: str) -> None:
    """Print the closed-form optimal bin count and its breakdown."""
    instance = _read_instance(instance_path)
    breakdown = predicted_bins(instance)

    table = Table(title="Bin count breakdown", show_header=False)
    table.add_row("mode", breakdown.mode.value)
    table.add_row("case_tag", breakdown.case_tag.value)
    fields = ["D"]
    if breakdown.case_tag is CaseTag.EVEN_COMBINE:
        fields += ["F", "R", "P", "M", "C", "RO", "X"]
    for name in fields:
        table.add_row(name, str(getattr(breakdown, name)))
    table.add_row("total", f"[bold]{breakdown.total}[/bold]")
    console.print(table)

    uncorrected = uncorrected_even_total(breakdown)
    if uncorrected != breakdown.total:
        console.print(
            f"[yellow]X without the P term would give {uncorrected} bins; "
            f"the packing needs {breakdown.total}.[/yellow]"
        )


@main.command("oracle")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--max-items",
    type=click.IntRange(min=0),
    default=None,
    help="Refuse instances with more items than this. Default: 12.",
)
@click.pass_obj
def oracle_cmd(settings: Settings, instance_path: str, max_items: int | None) -> None:
    """Compute the exact optimum by exhaustive search and compare with the solver."""
    instance = _read_instance(instance_path)
    limit = max_items if max_items is not None else settings.oracle_max_items
    try:
        with err_console.status("[bold green]Searching all packings..."):
            optimum = optimal_bins(instance, item_limit=limit)
    except OracleLimitError as exc:
        _fail(str(exc), EXIT_ORACLE_LIMIT)

    solver_bins = _solve_checked(instance).bin_count
    matches = optimum == solver_bins
    click.echo(f"optimum: {optimum}")
    click.echo(f"solver: {solver_bins}")
    click.echo(f"matches: {'yes' if matches else 'no'}")
    if not matches:
        _fail("Solver is not optimal on this instance", EXIT_SOLVER)


@main.command("gen")
@click.option("--colors", type=click.IntRange(min=1), required=True, help="Number of colors.")
@click.option("--items", type=click.IntRange(min=0), required=True, help="Number of items.")
@click.option(
    "--capacity", type=click.IntRange(min=0), default=0, show_default=True, help="0 = zero-weight."
)
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), default=0, show_default=True)
@click.option(
    "--skew",
    type=click.Choice([s.value for s in Skew]),
    default=Skew.UNIFORM.value,
    show_default=True,
)
def gen_cmd(colors: int, items: int, capacity: int, seed: int, skew: str) -> None:
    """Generate a reproducible random instance file."""
    spec = GenSpec(colors=colors, items=items, capacity=capacity, seed=seed, skew=Skew(skew))
    try:
        instance = generate(spec)
    except GenerationError as exc:
        _fail(str(exc), EXIT_PARSE)

    comments = [
        f"generated: colors={colors} items={items} capacity={capacity} seed={seed} "
        f"skew={skew} prng={PRNG_ALGORITHM}"
    ]
    if items and instance.k < colors:
        comments.append(f"note: only {instance.k} of {colors} colors populated")
    click.echo(serialize_instance(instance, comments), nl=False)


def _parse_sizes(value: str) -> list[int]:
    try:
        sizes = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None
    if any(size < 1 for size in sizes):
        raise click.BadParameter("sizes must be at least 1")
    return sizes


@main.command("bench")
@click.option("--sizes", default=None, help="Comma-separated item counts.")
@click.option("--trials", type=click.IntRange(min=0), default=None, help="Trials per size.")
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), default=None)
@click.option(
    "--max-ratio",
    type=float,
    default=None,
    help="Largest allowed time ratio per size doubling. Default: 2.5.",
)
@click.option(
    "--no-validate",
    is_flag=True,
    help="Skip validating each packing after it is timed.",
)
@click.pass_obj
def bench_cmd(
    settings: Settings,
    sizes: str | None,
    trials: int | None,
    seed: int | None,
    max_ratio: float | None,
    no_validate: bool,
) -> None:
    """Time the solver on every branch and check that it scales linearly."""
    size_list = _parse_sizes(sizes) if sizes else settings.bench_sizes
    trials = trials if trials is not None else settings.bench_trials
    seed = seed if seed is not None else settings.bench_seed
    max_ratio = max_ratio if max_ratio is not None else settings.bench_max_ratio

    try:
        with err_console.status("[bold green]Timing solver..."):
            report = run_bench(size_list, trials, seed, validate=not no_validate)
    except GenerationError as exc:
        _fail(str(exc), EXIT_PARSE)
    except SolverInvariantError as exc:
        _fail(str(exc), EXIT_SOLVER)

    if not report.rows:
        console.print("[yellow]No trials run. Nothing to report.[/yellow]")
        return

    table = Table(title="Solve time (best of trials)")
    table.add_column("branch")
    table.add_column("n", justify="right")
    table.add_column("seconds", justify="right")
    table.add_column("ratio", justify="right")
    for scaling in report.scaling:
        for i, (n, seconds) in enumerate(zip(scaling.sizes, scaling.seconds)):
            ratio = f"{scaling.ratios[i - 1]:.2f}" if i else "-"
            table.add_row(scaling.branch.value, str(n), f"{seconds:.4f}", ratio)
    console.print(table)

    ns = report.ns_per_item
    worst = report.worst_ratio()
    console.print(
        Panel(
            f"Per-item time:  {f'{ns:.1f} ns' if ns is not None else 'n/a'}\n"
            f"Worst ratio:    {f'{worst:.2f}' if worst is not None else 'n/a'}\n"
            f"Ratio bound:    {max_ratio:.2f} per doubling",
            title="Scaling",
            border_style="green",
        )
    )
    if not report.within(max_ratio):
        _fail("Solve time grew faster than the ratio bound", EXIT_INVALID)


if __name__ == "__main__":
    main()
