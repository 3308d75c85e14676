"""Benchmark protocol: time limits, gap metrics, campaigns, fleet minimisation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .config import SolverConfig
from .genetic import run
from .model import Fleet
from .stop import MaxIterations, MaxRuntime


# ---------------------------------------------------------------------------
# time limits


def parse_time_rule(spec: str):
    """``fixed:SEC`` | ``per-size`` | ``dimacs`` -> rule tuple."""
    spec = spec.strip().lower()
    if spec.startswith("fixed:"):
        return ("fixed", Fraction(spec.split(":", 1)[1]))
    if spec == "per-size":
        return ("per-size",)
    if spec == "dimacs":
        return ("dimacs",)
    raise ValueError(f"unknown time rule {spec!r}")


def scaled_time_limit(n: int, rule, passmark_ref=None, passmark_actual=None) -> Fraction:
    """Base seconds for an instance of n clients, scaled by the CPU-mark
    ratio. Exact rational arithmetic throughout."""
    if isinstance(rule, str):
        rule = parse_time_rule(rule)
    kind = rule[0]
    if kind == "fixed":
        base = Fraction(rule[1])
    elif kind == "per-size":
        base = Fraction(n * 240, 100)
    elif kind == "dimacs":
        base = Fraction(7200)
    else:
        raise ValueError(f"unknown time rule {rule!r}")
    if passmark_ref is not None and passmark_actual is not None:
        base *= Fraction(passmark_ref, passmark_actual)
    return base


# ---------------------------------------------------------------------------
# gap metrics


def gap_metrics(costs, bks) -> tuple[float, float]:
    """(mean gap %, gap of mean %) of per-instance costs against their
    best-known values. Inputs are aligned sequences or name-keyed dicts."""
    if isinstance(costs, dict):
        names = sorted(costs)
        missing = [name for name in names if name not in bks]
        if missing:
            raise ValueError(f"missing BKS for {missing[0]}")
        cost_list = [costs[name] for name in names]
        bks_list = [bks[name] for name in names]
    else:
        cost_list = list(costs)
        bks_list = list(bks)
        if len(cost_list) != len(bks_list):
            raise ValueError("costs and BKS lengths differ")
    if not cost_list:
        raise ValueError("no instances to compare")
    if any(b <= 0 for b in bks_list):
        raise ValueError("BKS values must be positive")

    mean_gap = 100 * sum(c / b - 1 for c, b in zip(cost_list, bks_list)) / len(cost_list)
    gap_of_mean = 100 * (sum(cost_list) / sum(bks_list) - 1)
    return mean_gap, gap_of_mean


# ---------------------------------------------------------------------------
# campaigns


@dataclass
class BenchmarkConfig:
    instances: list  # (name, ProblemData) pairs
    bks: dict = field(default_factory=dict)
    seeds: list = field(default_factory=lambda: list(range(1, 11)))
    time_rule: tuple | None = ("per-size",)
    passmark_ref: int | None = None
    passmark_actual: int | None = None
    max_iterations: int | None = None  # alternative to time-based limits
    profile: str | None = None
    jobs: int = 1

    def validate(self):
        if not self.instances:
            raise ValueError("no instances given")
        if not self.seeds:
            raise ValueError("need at least one seed")
        if self.time_rule is None and self.max_iterations is None:
            raise ValueError("need a time rule or an iteration budget")


@dataclass
class InstanceReport:
    name: str
    mean_cost: float
    bks: float | None
    gap: float | None  # percent; None when no BKS row exists
    num_feasible: int
    num_runs: int


@dataclass
class GapReport:
    rows: list[InstanceReport]
    mean_cost: float
    mean_gap: float | None
    gap_of_mean: float | None
    covered: int  # instances with a BKS entry


def _solve_one(args):
    name, data, seed, profile, limit_s, max_iterations = args
    config = (
        SolverConfig.named_profile(profile) if profile else SolverConfig.for_instance(data)
    )
    if max_iterations is not None:
        stop = MaxIterations(max_iterations)
    else:
        stop = MaxRuntime(float(limit_s))
    result = run(data, stop=stop, seed=seed, config=config, collect_stats=False)
    return name, seed, result.cost, result.is_feasible


def run_benchmark(config: BenchmarkConfig, progress=None) -> GapReport:
    """Solve every (instance, seed) pair and aggregate the gap report."""
    config.validate()
    tasks = []
    for name, data in config.instances:
        limit = None
        if config.max_iterations is None:
            limit = scaled_time_limit(
                data.num_clients,
                config.time_rule,
                config.passmark_ref,
                config.passmark_actual,
            )
        for seed in config.seeds:
            tasks.append((name, data, seed, config.profile, limit, config.max_iterations))

    outcomes = []
    if config.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for outcome in pool.map(_solve_one, tasks):
                outcomes.append(outcome)
                if progress:
                    progress(outcome)
    else:
        for task in tasks:
            outcome = _solve_one(task)
            outcomes.append(outcome)
            if progress:
                progress(outcome)

    by_name: dict[str, list] = {}
    for name, seed, cost, feasible in outcomes:
        by_name.setdefault(name, []).append((seed, cost, feasible))

    rows = []
    for name, _ in config.instances:
        runs = sorted(by_name[name])
        mean_cost = round(sum(c for _, c, _ in runs) / len(runs), 1)
        bks = config.bks.get(name)
        gap = 100 * (mean_cost / bks - 1) if bks else None
        rows.append(
            InstanceReport(
                name=name,
                mean_cost=mean_cost,
                bks=bks,
                gap=gap,
                num_feasible=sum(1 for _, _, f in runs if f),
                num_runs=len(runs),
            )
        )

    covered = [r for r in rows if r.bks is not None]
    mean_cost = round(sum(r.mean_cost for r in rows) / len(rows), 1)
    if covered:
        mean_gap, gap_of_mean = gap_metrics(
            [r.mean_cost for r in covered], [r.bks for r in covered]
        )
    else:
        mean_gap = gap_of_mean = None
    return GapReport(
        rows=rows,
        mean_cost=mean_cost,
        mean_gap=mean_gap,
        gap_of_mean=gap_of_mean,
        covered=len(covered),
    )


def _fmt_gap(gap) -> str:
    return "n/a" if gap is None else f"{gap:.2f}"


def write_report_csv(report: GapReport, path):
    """Per-instance table plus Mean and Gap-of-mean aggregate rows."""
    lines = ["instance,mean_cost,bks,gap_pct,feasible_runs"]
    for r in report.rows:
        bks = "" if r.bks is None else f"{r.bks:g}"
        lines.append(
            f"{r.name},{r.mean_cost:.1f},{bks},{_fmt_gap(r.gap)},{r.num_feasible}/{r.num_runs}"
        )
    lines.append(f"Mean,{report.mean_cost:.1f},,{_fmt_gap(report.mean_gap)},")
    lines.append(f"Gap of mean,,,{_fmt_gap(report.gap_of_mean)},")
    Path(path).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# fleet minimisation


@dataclass
class FleetResult:
    feasible: bool
    num_vehicles: int | None
    solution: object | None
    cost: float | None


def minimise_fleet(data, make_stop, seed: int = 0, config: SolverConfig | None = None) -> FleetResult:
    """Shrink the fleet one vehicle at a time until no feasible solution is
    found; returns the last feasible count and its solution.

    ``make_stop`` is a zero-argument factory producing a fresh stopping
    criterion for every solve step.
    """
    current = data
    best = None
    while True:
        result = run(
            current,
            stop=make_stop(),
            seed=seed,
            config=config or SolverConfig.for_instance(current),
            collect_stats=False,
        )
        if not result.is_feasible:
            break
        # the solution may use fewer vehicles than allowed; count what it uses
        used = result.best.num_routes
        best = (used, result.best, result.cost)
        if used <= 1:
            break
        current = current.replace_fleet(Fleet(used - 1, current.fleet.capacity))
    if best is None:
        return FleetResult(False, None, None, None)
    return FleetResult(True, best[0], best[1], best[2])
