"""Command-line front end: solve single instances, run benchmark campaigns,
minimise fleets. Exit codes: 0 ok, 1 solver failure, 2 usage or I/O error."""

from __future__ import annotations

import glob as globmod
import json
import sys
from pathlib import Path

import click

from .benchmark import (
    BenchmarkConfig,
    minimise_fleet,
    parse_time_rule,
    run_benchmark,
    write_report_csv,
)
from .config import SolverConfig, load_config_file
from .fileio import read_bks, read_instance, write_solution
from .genetic import run as ga_run
from .genetic import write_stats_csv
from .stop import MaxIterations, MaxRuntime, NoImprovement


class InputError(click.ClickException):
    """I/O or format problem with user-supplied files (exit code 2)."""

    exit_code = 2


def _load_instance(path, round_convention):
    try:
        return read_instance(path, round_convention)
    except FileNotFoundError:
        raise InputError(f"cannot read instance {path}") from None
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read instance {path}: {exc}") from None


def _resolve_config(data, profile, config_file):
    if profile:
        config = SolverConfig.named_profile(profile)
    else:
        config = SolverConfig.for_instance(data)
    if config_file:
        config.apply_overrides(load_config_file(config_file))
    return config


def _make_stop(max_runtime, max_iterations, no_improvement, default_iterations=1000):
    given = [x is not None for x in (max_runtime, max_iterations, no_improvement)]
    if sum(given) > 1:
        raise click.UsageError("give at most one of --max-runtime/--max-iterations/--no-improvement")
    if max_runtime is not None:
        return lambda: MaxRuntime(max_runtime)
    if no_improvement is not None:
        return lambda: NoImprovement(no_improvement)
    iters = default_iterations if max_iterations is None else max_iterations
    return lambda: MaxIterations(iters)


def _parse_seeds(spec: str) -> list[int]:
    spec = spec.strip()
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in spec.split(",") if tok.strip()]


@click.group()
@click.version_option()
def main():
    """Hybrid genetic search for CVRP and VRPTW, with a benchmark harness."""


@main.command()
@click.argument("instance", type=click.Path())
@click.option("--round", "round_convention", default="round", show_default=True,
              help="Rounding convention: round | trunc | dimacs | exact:F.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--max-runtime", type=float, default=None, help="Stop after SEC seconds.")
@click.option("--max-iterations", type=int, default=None,
              help="Stop after N iterations (default 1000 when nothing else given).")
@click.option("--no-improvement", type=int, default=None,
              help="Stop after N non-improving iterations.")
@click.option("--profile", type=click.Choice(["cvrp", "vrptw"]), default=None,
              help="Parameter profile; default detects by instance type.")
@click.option("--config", "config_file", type=click.Path(exists=True), default=None,
              help="key=value parameter file overriding the profile.")
@click.option("--out", type=click.Path(), default=None, help="Write the best solution here.")
@click.option("--stats", type=click.Path(), default=None, help="Write the statistics CSV here.")
@click.option("--plot", "plot_dir", type=click.Path(), default=None,
              help="Render SVG report figures into this directory.")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON summary instead of text.")
def solve(instance, round_convention, seed, max_runtime, max_iterations,
          no_improvement, profile, config_file, out, stats, plot_dir, as_json):
    """Solve one instance and report the best solution found."""
    data = _load_instance(instance, round_convention)
    config = _resolve_config(data, profile, config_file)
    stop = _make_stop(max_runtime, max_iterations, no_improvement)()
    collect = stats is not None or plot_dir is not None
    result = ga_run(data, stop=stop, seed=seed, config=config, collect_stats=collect)

    if out:
        write_solution(result.best, result.cost, out)
    if stats:
        write_stats_csv(result.stats, stats)
    if plot_dir:
        from .plotting import save_report_figures

        save_report_figures(result.stats, plot_dir, solution=result.best, data=data)

    if as_json:
        click.echo(json.dumps({
            "instance": str(instance),
            "cost": result.cost,
            "feasible": result.is_feasible,
            "iterations": result.iterations,
            "runtime_s": round(result.runtime, 3),
            "num_routes": result.best.num_routes,
            "routes": result.best.route_lists(),
            "seed": seed,
        }))
    else:
        click.echo(f"instance   {instance}")
        click.echo(f"cost       {result.cost}")
        click.echo(f"feasible   {'yes' if result.is_feasible else 'NO'}")
        click.echo(f"routes     {result.best.num_routes}")
        click.echo(f"iterations {result.iterations}")
        click.echo(f"runtime    {result.runtime:.2f}s")
    if not result.is_feasible:
        sys.exit(1)


@main.command()
@click.option("--instances", "patterns", required=True, multiple=True,
              help="Instance file or glob; repeatable.")
@click.option("--bks", "bks_file", type=click.Path(exists=True), default=None,
              help="CSV of instance,cost best-known values.")
@click.option("--seeds", default="1..10", show_default=True,
              help="Seed list: '1..10' or '1,2,5'.")
@click.option("--round", "round_convention", default="round", show_default=True)
@click.option("--time-rule", default="per-size", show_default=True,
              help="fixed:SEC | per-size | dimacs.")
@click.option("--max-iterations", type=int, default=None,
              help="Iteration budget instead of a time rule (reproducible).")
@click.option("--passmark-ref", type=int, default=None,
              help="Reference CPU mark the time limits were calibrated on.")
@click.option("--passmark", "passmark_actual", type=int, default=None,
              help="This machine's CPU mark.")
@click.option("--profile", type=click.Choice(["cvrp", "vrptw"]), default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--report", "report_file", type=click.Path(), required=True)
def bench(patterns, bks_file, seeds, round_convention, time_rule, max_iterations,
          passmark_ref, passmark_actual, profile, jobs, report_file):
    """Run a multi-seed benchmark campaign and write the gap report."""
    paths: list[str] = []
    for pattern in patterns:
        hits = sorted(globmod.glob(pattern))
        paths.extend(hits if hits else [pattern])
    if not paths:
        raise click.UsageError("no instances matched")
    instances = [(Path(p).stem, _load_instance(p, round_convention)) for p in paths]

    bks = {}
    if bks_file:
        try:
            bks = read_bks(bks_file)
        except ValueError as exc:
            raise InputError(str(exc)) from None

    config = BenchmarkConfig(
        instances=instances,
        bks=bks,
        seeds=_parse_seeds(seeds),
        time_rule=parse_time_rule(time_rule),
        passmark_ref=passmark_ref,
        passmark_actual=passmark_actual,
        max_iterations=max_iterations,
        profile=profile,
        jobs=jobs,
    )

    def progress(outcome):
        name, seed, cost, feasible = outcome
        tag = "" if feasible else "  [infeasible]"
        click.echo(f"  {name} seed {seed}: {cost}{tag}", err=True)

    report = run_benchmark(config, progress=progress)
    write_report_csv(report, report_file)
    missing = len(report.rows) - report.covered
    if missing:
        click.echo(f"warning: {missing} instance(s) without BKS; gaps partial", err=True)
    click.echo(f"mean cost   {report.mean_cost:.1f}")
    if report.mean_gap is not None:
        click.echo(f"mean gap    {report.mean_gap:.2f}%")
        click.echo(f"gap of mean {report.gap_of_mean:.2f}%")
    click.echo(f"report written to {report_file}")


@main.command()
@click.argument("instance", type=click.Path())
@click.option("--round", "round_convention", default="round", show_default=True)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--max-runtime", type=float, default=None,
              help="Per-step runtime budget in seconds.")
@click.option("--max-iterations", type=int, default=None,
              help="Per-step iteration budget (default 500).")
@click.option("--no-improvement", type=int, default=None)
@click.option("--profile", type=click.Choice(["cvrp", "vrptw"]), default=None)
@click.option("--config", "config_file", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None)
def fleet(instance, round_convention, seed, max_runtime, max_iterations,
          no_improvement, profile, config_file, out):
    """Find the smallest fleet that still admits a feasible solution."""
    data = _load_instance(instance, round_convention)
    config = _resolve_config(data, profile, config_file)
    make_stop = _make_stop(max_runtime, max_iterations, no_improvement,
                           default_iterations=500)
    outcome = minimise_fleet(data, make_stop, seed=seed, config=config)
    if not outcome.feasible:
        click.echo("no feasible solution at the initial fleet size", err=True)
        sys.exit(1)
    click.echo(f"vehicles {outcome.num_vehicles}")
    click.echo(f"cost     {outcome.cost}")
    if out:
        write_solution(outcome.solution, outcome.cost, out)


if __name__ == "__main__":
    main()
