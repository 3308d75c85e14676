"""Hybrid genetic search for capacitated and time-windowed vehicle routing."""

from .config import GaParams, SolverConfig, load_config_file
from .costs import CostEvaluator, PenaltyManager, PenaltyParams
from .crossover import CrossoverOutcome, greedy_reinsert, srex
from .fileio import (
    read_bks,
    read_instance,
    read_solution,
    round_value,
    write_solution,
)
from .genetic import Result, StatisticsRow, run, write_stats_csv
from .model import Client, Depot, Fleet, Model, ProblemData, build_problem
from .population import Population, PopulationParams, SubPopulation
from .search import (
    LocalSearch,
    NeighbourhoodParams,
    compute_neighbours,
    ls_run,
)
from .segments import DurationSegment, concat, route_stats, segment_of
from .solution import Solution, broken_pairs_distance, make_solution, random_solution
from .stop import MaxIterations, MaxRuntime, NoImprovement, RunProgress, should_stop

__version__ = "0.1.0"

__all__ = [
    "Client",
    "CostEvaluator",
    "CrossoverOutcome",
    "Depot",
    "DurationSegment",
    "Fleet",
    "GaParams",
    "LocalSearch",
    "MaxIterations",
    "MaxRuntime",
    "Model",
    "NeighbourhoodParams",
    "NoImprovement",
    "PenaltyManager",
    "PenaltyParams",
    "Population",
    "PopulationParams",
    "ProblemData",
    "Result",
    "RunProgress",
    "SolverConfig",
    "Solution",
    "StatisticsRow",
    "SubPopulation",
    "broken_pairs_distance",
    "build_problem",
    "compute_neighbours",
    "concat",
    "greedy_reinsert",
    "load_config_file",
    "ls_run",
    "make_solution",
    "random_solution",
    "read_bks",
    "read_instance",
    "read_solution",
    "round_value",
    "route_stats",
    "run",
    "segment_of",
    "should_stop",
    "srex",
    "write_solution",
    "write_stats_csv",
]
