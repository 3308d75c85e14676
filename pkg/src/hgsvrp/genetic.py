"""Main search loop: selection, crossover, improvement, repair, restarts."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .config import SolverConfig
from .costs import PenaltyManager
from .crossover import srex
from .population import Population
from .search import LocalSearch, compute_neighbours
from .solution import Solution, random_solution
from .stop import RunProgress

STATS_COLUMNS = (
    "iteration",
    "elapsed_s",
    "feas_size",
    "feas_best",
    "feas_avg",
    "feas_div",
    "infeas_size",
    "infeas_best",
    "infeas_avg",
    "infeas_div",
    "iter_s",
)


@dataclass
class StatisticsRow:
    iteration: int
    elapsed_s: float
    feas_size: int
    feas_best: float
    feas_avg: float
    feas_div: float
    infeas_size: int
    infeas_best: float
    infeas_avg: float
    infeas_div: float
    iter_s: float

    def as_csv_line(self) -> str:
        return (
            f"{self.iteration},{self.elapsed_s:.6f},"
            f"{self.feas_size},{_num(self.feas_best)},{_num(self.feas_avg)},"
            f"{self.feas_div:.4f},"
            f"{self.infeas_size},{_num(self.infeas_best)},{_num(self.infeas_avg)},"
            f"{self.infeas_div:.4f},{self.iter_s:.6f}"
        )


def _num(value: float) -> str:
    return "nan" if math.isnan(value) else f"{value:.2f}"


def write_stats_csv(rows, path):
    lines = [",".join(STATS_COLUMNS)]
    lines += [row.as_csv_line() for row in rows]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


class Result:
    """Outcome of a run: the best solution observed plus run statistics.

    ``best`` is the best feasible solution ever seen; if the run never found
    a feasible solution it is the infeasible solution with the lowest
    penalised cost, and ``is_feasible`` is False.
    """

    def __init__(self, best, cost, is_feasible, iterations, runtime, stats):
        self.best = best
        self.cost = cost
        self.is_feasible = is_feasible
        self.iterations = iterations
        self.runtime = runtime
        self.stats = stats

    def __str__(self):
        tag = "feasible" if self.is_feasible else "INFEASIBLE"
        return (
            f"cost {self.cost} ({tag}), {self.best.num_routes} routes, "
            f"{self.iterations} iterations in {self.runtime:.2f}s"
        )


def run(data, stop, seed: int = 0, rng=None, config: SolverConfig | None = None,
        collect_stats: bool = True, clock=None) -> Result:
    """Run the hybrid genetic search until ``stop`` fires.

    Deterministic for a fixed seed, instance, config, and clock; pass a fake
    ``clock`` to make the emitted statistics reproducible byte for byte.
    """
    rng = random.Random(seed) if rng is None else rng
    config = SolverConfig.for_instance(data) if config is None else config
    config.validate()
    clock = time.perf_counter if clock is None else clock

    neighbours = compute_neighbours(data, config.neighbourhood)
    search = LocalSearch(data, neighbours)
    penalties = PenaltyManager(config.penalty)
    population = Population(config.population)

    start = clock()
    stats: list[StatisticsRow] = []

    best_feasible: Solution | None = None
    best_feasible_cost = None
    best_any: Solution | None = None
    best_any_cost = None

    def observe(solution):
        nonlocal best_feasible, best_feasible_cost, best_any, best_any_cost
        improved = False
        if solution.is_feasible:
            if best_feasible is None or solution.distance < best_feasible_cost:
                best_feasible = solution
                best_feasible_cost = solution.distance
                improved = True
        elif best_feasible is None:
            pen = penalties.evaluator().penalised_cost(solution)
            if best_any is None or pen < best_any_cost:
                best_any = solution
                best_any_cost = pen
        return improved

    def seed_population():
        evaluator = penalties.evaluator()
        for _ in range(config.ga.num_initial_solutions):
            improved = search.run(random_solution(data, rng), evaluator, rng)
            population.add(improved, evaluator)
            observe(improved)

    seed_population()

    iterations = 0
    since_improvement = 0
    while True:
        progress = RunProgress(iterations, clock() - start, since_improvement)
        if stop.should_stop(progress):
            break
        iter_start = clock()
        iterations += 1
        evaluator = penalties.evaluator()

        parent_a = population.tournament_select(rng)
        parent_b = population.tournament_select(rng)
        if parent_b is parent_a:  # one reselection attempt, then accept
            parent_b = population.tournament_select(rng)

        offspring = srex(parent_a, parent_b, data, evaluator, rng).offspring
        candidate = search.run(offspring, evaluator, rng)

        if not candidate.is_feasible and rng.random() < config.ga.repair_probability:
            repaired = search.run(candidate, penalties.booster_evaluator(), rng)
            if repaired.is_feasible:
                candidate = repaired
            elif evaluator.penalised_cost(repaired) < evaluator.penalised_cost(candidate):
                candidate = repaired

        penalties.register(candidate.excess_load == 0, candidate.time_warp == 0)
        population.add(candidate, evaluator)

        if observe(candidate):
            since_improvement = 0
        else:
            since_improvement += 1

        if collect_stats:
            now = clock()
            stats.append(_stats_row(population, iterations, now - start, now - iter_start))

        if since_improvement >= config.ga.restart_after_non_improving:
            population.clear()
            seed_population()
            since_improvement = 0

    runtime = clock() - start
    if best_feasible is not None:
        return Result(best_feasible, best_feasible_cost, True, iterations, runtime, stats)
    return Result(best_any, best_any_cost, False, iterations, runtime, stats)


def _stats_row(population, iteration, elapsed, iter_s) -> StatisticsRow:
    def side(subpop):
        if len(subpop) == 0:
            return 0, math.nan, math.nan, 0.0
        costs = [m.cost for m in subpop.members]
        return (
            len(subpop),
            float(min(costs)),
            sum(costs) / len(costs),
            subpop.avg_diversity(),
        )

    f_size, f_best, f_avg, f_div = side(population.feasible)
    i_size, i_best, i_avg, i_div = side(population.infeasible)
    return StatisticsRow(
        iteration, elapsed,
        f_size, f_best, f_avg, f_div,
        i_size, i_best, i_avg, i_div,
        iter_s,
    )
