"""Penalised-cost evaluation and adaptive penalty management."""

from __future__ import annotations

from dataclasses import dataclass

PENALTY_MIN = 1
PENALTY_MAX = 100_000


class CostEvaluator:
    """Weights excess load and time warp into a single integer cost."""

    __slots__ = ("capacity_penalty", "tw_penalty")

    def __init__(self, capacity_penalty: int, tw_penalty: int):
        if capacity_penalty < 1 or tw_penalty < 1:
            raise ValueError("penalties must be at least 1")
        self.capacity_penalty = capacity_penalty
        self.tw_penalty = tw_penalty

    def penalised_cost(self, solution) -> int:
        return (
            solution.distance
            + self.capacity_penalty * solution.excess_load
            + self.tw_penalty * solution.time_warp
        )

    def route_cost(self, distance: int, load: int, capacity: int, time_warp: int) -> int:
        excess = load - capacity
        if excess < 0:
            excess = 0
        return distance + self.capacity_penalty * excess + self.tw_penalty * time_warp

    def __repr__(self):
        return f"CostEvaluator(cap={self.capacity_penalty}, tw={self.tw_penalty})"


@dataclass
class PenaltyParams:
    """Adaptive penalty controller settings (defaults: time-window profile)."""

    init_capacity_penalty: int = 20
    init_tw_penalty: int = 6
    repair_booster: int = 12
    registrations_between_updates: int = 50
    penalty_increase: float = 1.34
    penalty_decrease: float = 0.32
    target_feasible: float = 0.43

    def validate(self):
        if self.penalty_increase <= 1:
            raise ValueError("penalty increase factor must exceed 1")
        if not 0 < self.penalty_decrease < 1:
            raise ValueError("penalty decrease factor must lie in (0, 1)")
        if not 0 < self.target_feasible < 1:
            raise ValueError("target feasible fraction must lie in (0, 1)")


def _clamp(value: int) -> int:
    return max(PENALTY_MIN, min(PENALTY_MAX, value))


class PenaltyManager:
    """Steers penalties so a target fraction of improved solutions is feasible.

    Load and time-warp feasibility are tracked in separate buffers; each
    penalty updates independently once its buffer fills up.
    """

    def __init__(self, params: PenaltyParams | None = None):
        self.params = params or PenaltyParams()
        self.params.validate()
        self.capacity_penalty = _clamp(self.params.init_capacity_penalty)
        self.tw_penalty = _clamp(self.params.init_tw_penalty)
        self._load_feas: list[bool] = []
        self._time_feas: list[bool] = []

    def evaluator(self) -> CostEvaluator:
        return CostEvaluator(self.capacity_penalty, self.tw_penalty)

    def booster_evaluator(self) -> CostEvaluator:
        booster = self.params.repair_booster
        return CostEvaluator(self.capacity_penalty * booster, self.tw_penalty * booster)

    def register(self, load_feasible: bool, time_feasible: bool):
        self._load_feas.append(load_feasible)
        self._time_feas.append(time_feasible)
        limit = self.params.registrations_between_updates
        if len(self._load_feas) >= limit:
            self.capacity_penalty = self._updated(self.capacity_penalty, self._load_feas)
            self._load_feas = []
        if len(self._time_feas) >= limit:
            self.tw_penalty = self._updated(self.tw_penalty, self._time_feas)
            self._time_feas = []

    def _updated(self, penalty: int, buffer: list[bool]) -> int:
        import math

        fraction = sum(buffer) / len(buffer)
        target = self.params.target_feasible
        if fraction < target:
            return _clamp(math.ceil(penalty * self.params.penalty_increase))
        if fraction > target:
            return _clamp(math.floor(penalty * self.params.penalty_decrease))
        return penalty
