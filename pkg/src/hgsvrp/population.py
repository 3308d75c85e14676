"""Feasible/infeasible subpopulations, biased fitness, survivor selection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .solution import Solution, broken_pairs_distance


@dataclass
class PopulationParams:
    min_pop_size: int = 25
    generation_size: int = 40
    num_elite: int = 4
    num_close: int = 5
    lb_diversity: float = 0.1
    ub_diversity: float = 0.5
    tournament_k: int = 2

    def validate(self):
        if min(self.min_pop_size, self.generation_size, self.num_close) < 1:
            raise ValueError("population sizes must be positive")
        if self.num_elite < 0:
            raise ValueError("num_elite must be non-negative")
        if not 0 <= self.lb_diversity < self.ub_diversity <= 1:
            raise ValueError("diversity bounds must satisfy 0 <= lb < ub <= 1")
        if self.tournament_k < 1:
            raise ValueError("tournament size must be positive")

    @property
    def capacity(self) -> int:
        return self.min_pop_size + self.generation_size


class _Member:
    __slots__ = ("uid", "solution", "cost", "prox")

    def __init__(self, uid, solution, cost):
        self.uid = uid
        self.solution = solution
        self.cost = cost
        self.prox: dict[int, float] = {}  # uid -> BPD to that member


class SubPopulation:
    """Solutions of one feasibility class, with diversity bookkeeping.

    Member costs are frozen at insertion (penalised cost under the evaluator
    current at that moment), which keeps orderings stable as penalties adapt.
    """

    def __init__(self, params: PopulationParams):
        self.params = params
        self.members: list[_Member] = []
        self._uid = itertools.count()
        self._fitness_cache: list[float] | None = None

    def __len__(self):
        return len(self.members)

    def solutions(self) -> list[Solution]:
        return [m.solution for m in self.members]

    def add(self, solution: Solution, cost_evaluator):
        member = _Member(next(self._uid), solution, cost_evaluator.penalised_cost(solution))
        for other in self.members:
            bpd = broken_pairs_distance(solution, other.solution)
            member.prox[other.uid] = bpd
            other.prox[member.uid] = bpd
        self.members.append(member)
        self._fitness_cache = None
        if len(self.members) > self.params.capacity:
            self.purge()

    def _avg_diversity(self, member: _Member) -> float:
        """Mean BPD to the closest ``num_close`` members, preferring values
        inside the [lb, ub] diversity band when enough are available."""
        if not member.prox:
            return 0.0
        values = sorted(member.prox.values())
        lb, ub = self.params.lb_diversity, self.params.ub_diversity
        in_band = [v for v in values if lb <= v <= ub]
        chosen = in_band[: self.params.num_close]
        if len(chosen) < self.params.num_close:
            fillers = [v for v in values if not lb <= v <= ub]
            chosen += fillers[: self.params.num_close - len(chosen)]
        return sum(chosen) / len(chosen)

    def avg_diversity(self) -> float:
        """Population-level mean of the per-member diversity statistic."""
        if not self.members:
            return 0.0
        return sum(self._avg_diversity(m) for m in self.members) / len(self.members)

    def biased_fitness(self) -> list[float]:
        """Fitness per member (aligned with ``members``); lower is better."""
        if self._fitness_cache is not None:
            return self._fitness_cache
        size = len(self.members)
        if size == 0:
            return []
        by_cost = sorted(range(size), key=lambda i: (self.members[i].cost, i))
        rank_cost = [0] * size
        for rank, i in enumerate(by_cost):
            rank_cost[i] = rank
        diversities = [self._avg_diversity(m) for m in self.members]
        by_div = sorted(range(size), key=lambda i: (-diversities[i], i))
        rank_div = [0] * size
        for rank, i in enumerate(by_div):
            rank_div[i] = rank

        weight = 1.0 - self.params.num_elite / size
        if weight < 0:
            weight = 0.0
        self._fitness_cache = [
            (rank_cost[i] + weight * rank_div[i]) / size for i in range(size)
        ]
        return self._fitness_cache

    def purge(self):
        """Shrink back to the minimum size: duplicates first, then worst fitness."""
        while len(self.members) > self.params.min_pop_size:
            fitness = self.biased_fitness()
            dup_idcs = [
                i
                for i, m in enumerate(self.members)
                if any(v == 0.0 for v in m.prox.values())
            ]
            if dup_idcs:
                victim = max(dup_idcs, key=lambda i: (fitness[i], self.members[i].uid))
            else:
                victim = max(range(len(self.members)), key=lambda i: (fitness[i], self.members[i].uid))
            self._remove(victim)

    def _remove(self, idx: int):
        member = self.members.pop(idx)
        self._fitness_cache = None
        for other in self.members:
            other.prox.pop(member.uid, None)


class Population:
    """Feasible and infeasible subpopulations plus parent selection."""

    def __init__(self, params: PopulationParams | None = None):
        self.params = params or PopulationParams()
        self.params.validate()
        self.feasible = SubPopulation(self.params)
        self.infeasible = SubPopulation(self.params)

    def __len__(self):
        return len(self.feasible) + len(self.infeasible)

    def add(self, solution: Solution, cost_evaluator):
        subpop = self.feasible if solution.is_feasible else self.infeasible
        subpop.add(solution, cost_evaluator)

    def clear(self):
        self.feasible = SubPopulation(self.params)
        self.infeasible = SubPopulation(self.params)

    def tournament_select(self, rng, k: int | None = None) -> Solution:
        """k-way tournament with replacement over both subpopulations."""
        if len(self) == 0:
            raise ValueError("cannot select from an empty population")
        k = self.params.tournament_k if k is None else k
        fit_feas = self.feasible.biased_fitness()
        fit_infeas = self.infeasible.biased_fitness()
        pool = [(fit_feas[i], m.uid, m.solution) for i, m in enumerate(self.feasible.members)]
        pool += [(fit_infeas[i], m.uid, m.solution) for i, m in enumerate(self.infeasible.members)]
        best = None
        for _ in range(max(k, 1)):
            pick = pool[rng.randrange(len(pool))]
            if best is None or pick[0] < best[0]:
                best = pick
        return best[2]
