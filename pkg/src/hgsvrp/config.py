"""Solver configuration: parameter bundles, built-in profiles, config files.

Config files are flat ``key = value`` text; keys mirror the parameter names
below (e.g. ``repair_probability=0.8``). The ``cvrp`` and ``vrptw`` profiles
carry the published tuning for each problem class.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .costs import PenaltyParams
from .population import PopulationParams
from .search import NeighbourhoodParams


@dataclass
class GaParams:
    repair_probability: float = 0.8
    restart_after_non_improving: int = 20_000
    num_initial_solutions: int = 25

    def validate(self):
        if not 0 <= self.repair_probability <= 1:
            raise ValueError("repair probability must lie in [0, 1]")
        if self.restart_after_non_improving < 1 or self.num_initial_solutions < 1:
            raise ValueError("restart and initial-solution counts must be positive")


@dataclass
class SolverConfig:
    ga: GaParams = field(default_factory=GaParams)
    penalty: PenaltyParams = field(default_factory=PenaltyParams)
    population: PopulationParams = field(default_factory=PopulationParams)
    neighbourhood: NeighbourhoodParams = field(default_factory=NeighbourhoodParams)

    def validate(self):
        self.ga.validate()
        self.penalty.validate()
        self.population.validate()
        self.neighbourhood.validate()

    @classmethod
    def cvrp(cls) -> "SolverConfig":
        return cls(
            ga=GaParams(repair_probability=0.5),
            penalty=PenaltyParams(
                registrations_between_updates=100,
                penalty_increase=1.25,
                penalty_decrease=0.85,
                init_tw_penalty=1,  # unused on pure-capacity instances
            ),
            neighbourhood=NeighbourhoodParams(
                num_neighbours=20,
                weight_wait_time=0.0,
                weight_time_warp=0.0,
                symmetric_neighbours=True,
            ),
        )

    @classmethod
    def vrptw(cls) -> "SolverConfig":
        return cls(
            ga=GaParams(repair_probability=0.8),
            penalty=PenaltyParams(
                registrations_between_updates=50,
                penalty_increase=1.34,
                penalty_decrease=0.32,
                init_tw_penalty=6,
            ),
            neighbourhood=NeighbourhoodParams(
                num_neighbours=40,
                weight_wait_time=0.2,
                weight_time_warp=1.0,
                symmetric_neighbours=False,
            ),
        )

    @classmethod
    def for_instance(cls, data) -> "SolverConfig":
        return cls.vrptw() if data.has_time_component else cls.cvrp()

    @classmethod
    def named_profile(cls, name: str) -> "SolverConfig":
        if name == "cvrp":
            return cls.cvrp()
        if name == "vrptw":
            return cls.vrptw()
        raise ValueError(f"unknown profile {name!r}")

    def apply_overrides(self, overrides: dict[str, str]) -> "SolverConfig":
        """Set flat key=value overrides onto the matching parameter bundle."""
        for key, raw in overrides.items():
            target = None
            for bundle in (self.ga, self.penalty, self.population, self.neighbourhood):
                if key in {f.name for f in fields(bundle)}:
                    target = bundle
                    break
            if target is None:
                raise ValueError(f"unknown config key {key!r}")
            current = getattr(target, key)
            if isinstance(current, bool):
                value = str(raw).strip().lower() in {"1", "true", "yes", "on"}
            elif isinstance(current, int):
                value = int(raw)
            else:
                value = float(raw)
            setattr(target, key, value)
        self.validate()
        return self


def load_config_file(path) -> dict[str, str]:
    """Parse ``key = value`` lines; '#' starts a comment, blanks ignored."""
    overrides: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = line.split("=", 1)
            overrides[key.strip()] = value.strip()
    return overrides

