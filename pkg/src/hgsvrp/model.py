"""Problem instance representation and the high-level ``Model`` builder."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Upper bound used for "no time window". Windows at this value never bind,
# and instances whose windows all sit here skip time bookkeeping entirely.
TW_OPEN = 2**53

# Default distance/duration for edges not given to the Model facade.
MISSING_EDGE_VALUE = 10**7


@dataclass(frozen=True)
class Client:
    """A customer location. Time windows bound the *start* of service."""

    index: int
    x: int
    y: int
    demand: int = 0
    service_duration: int = 0
    tw_early: int = 0
    tw_late: int = TW_OPEN

    def validate(self):
        if self.demand < 0:
            raise ValueError(f"negative demand at client {self.index}")
        if self.service_duration < 0:
            raise ValueError(f"negative service duration at client {self.index}")
        if self.tw_early < 0:
            raise ValueError(f"negative time window at client {self.index}")
        if self.tw_early > self.tw_late:
            raise ValueError(f"time window inverted at client {self.index}")


@dataclass(frozen=True)
class Depot:
    """The single depot; its window is the vehicles' operating horizon."""

    x: int
    y: int
    tw_early: int = 0
    tw_late: int = TW_OPEN

    index: int = 0

    def validate(self):
        if self.tw_early < 0 or self.tw_early > self.tw_late:
            raise ValueError("time window inverted at depot")


@dataclass(frozen=True)
class Fleet:
    """A homogeneous fleet: ``num_vehicles`` vehicles of capacity ``capacity``."""

    num_vehicles: int
    capacity: int

    def validate(self):
        if self.num_vehicles < 1:
            raise ValueError("fleet must have at least one vehicle")
        if self.capacity <= 0:
            raise ValueError("vehicle capacity must be positive")


def _check_matrix(mat: np.ndarray, dim: int, what: str) -> np.ndarray:
    mat = np.asarray(mat, dtype=np.int64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"{what} matrix is not square")
    if mat.shape[0] != dim:
        raise ValueError(f"{what} matrix has dimension {mat.shape[0]}, expected {dim}")
    if (mat < 0).any():
        i, j = map(int, np.argwhere(mat < 0)[0])
        raise ValueError(f"negative {what} entry at ({i}, {j})")
    if np.diagonal(mat).any():
        i = int(np.flatnonzero(np.diagonal(mat))[0])
        raise ValueError(f"nonzero {what} diagonal at ({i}, {i})")
    mat = mat.copy()
    mat.setflags(write=False)
    return mat


class ProblemData:
    """Immutable instance: depot, clients, fleet, and integer matrices.

    Location index 0 is the depot; clients are 1..n. All quantities are
    integers; callers pick the scaling before construction.
    """

    def __init__(self, depot, clients, fleet, distances, durations):
        n = len(clients)
        self._depot = depot
        self._clients = tuple(clients)
        self._fleet = fleet
        self._dist = _check_matrix(distances, n + 1, "distance")
        self._dur = _check_matrix(durations, n + 1, "duration")

        depot.validate()
        fleet.validate()
        for pos, client in enumerate(self._clients, start=1):
            if client.index != pos:
                raise ValueError(f"client at position {pos} has index {client.index}")
            client.validate()

        # Flat per-location attribute lists, depot at 0.
        self.demands = [0] + [c.demand for c in self._clients]
        self.services = [0] + [c.service_duration for c in self._clients]
        self.tw_early = [depot.tw_early] + [c.tw_early for c in self._clients]
        self.tw_late = [depot.tw_late] + [c.tw_late for c in self._clients]

        # Hot-path row caches: plain ints index faster than numpy scalars.
        self.dist_rows = [row.tolist() for row in self._dist]
        self.dur_rows = [row.tolist() for row in self._dur]

        self.has_time_component = (
            any(l < TW_OPEN for l in self.tw_late)
            or any(s > 0 for s in self.services)
            or any(e > 0 for e in self.tw_early)
        )
        self.symmetric_distances = bool((self._dist == self._dist.T).all())
        self.symmetric_durations = bool((self._dur == self._dur.T).all())

    @property
    def num_clients(self) -> int:
        return len(self._clients)

    @property
    def num_locations(self) -> int:
        return len(self._clients) + 1

    @property
    def depot(self) -> Depot:
        return self._depot

    @property
    def clients(self) -> tuple[Client, ...]:
        return self._clients

    @property
    def fleet(self) -> Fleet:
        return self._fleet

    def client(self, idx: int) -> Client:
        return self._clients[idx - 1]

    def location(self, idx: int):
        return self._depot if idx == 0 else self._clients[idx - 1]

    def distance(self, frm: int, to: int) -> int:
        return int(self._dist[frm, to])

    def duration(self, frm: int, to: int) -> int:
        return int(self._dur[frm, to])

    def distance_matrix(self) -> np.ndarray:
        return self._dist

    def duration_matrix(self) -> np.ndarray:
        return self._dur

    def replace_fleet(self, fleet: Fleet) -> "ProblemData":
        """New instance sharing everything but the fleet."""
        return ProblemData(self._depot, self._clients, fleet, self._dist, self._dur)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProblemData):
            return NotImplemented
        return (
            self._depot == other._depot
            and self._clients == other._clients
            and self._fleet == other._fleet
            and (self._dist == other._dist).all()
            and (self._dur == other._dur).all()
        )

    def __repr__(self):
        return (
            f"ProblemData(n={self.num_clients}, vehicles={self._fleet.num_vehicles},"
            f" capacity={self._fleet.capacity})"
        )


def build_problem(depot, clients, fleet, distances, durations) -> ProblemData:
    """Validate and build an immutable :class:`ProblemData`."""
    return ProblemData(depot, clients, fleet, distances, durations)


class Model:
    """Builder facade: accumulate locations, fleet, and edges, then solve.

    Edges not added default to ``missing_edge_value`` in both matrices, so a
    partially specified model still yields a complete instance.
    """

    def __init__(self, missing_edge_value: int = MISSING_EDGE_VALUE):
        self._missing = missing_edge_value
        self._depot: Depot | None = None
        self._clients: list[Client] = []
        self._fleet: Fleet | None = None
        self._edges: dict[tuple[int, int], tuple[int, int]] = {}
        self._loc_ids: dict[int, int] = {}  # id(location) -> index

    def add_depot(self, x: int, y: int, tw_early: int = 0, tw_late: int = TW_OPEN) -> Depot:
        if self._depot is not None:
            raise ValueError("model already has a depot")
        self._depot = Depot(x=x, y=y, tw_early=tw_early, tw_late=tw_late)
        self._loc_ids[id(self._depot)] = 0
        return self._depot

    def add_client(
        self,
        x: int,
        y: int,
        demand: int = 0,
        service_duration: int = 0,
        tw_early: int = 0,
        tw_late: int = TW_OPEN,
    ) -> Client:
        client = Client(
            index=len(self._clients) + 1,
            x=x,
            y=y,
            demand=demand,
            service_duration=service_duration,
            tw_early=tw_early,
            tw_late=tw_late,
        )
        self._clients.append(client)
        self._loc_ids[id(client)] = client.index
        return client

    def add_vehicle_type(self, num_available: int, capacity: int) -> Fleet:
        if self._fleet is not None:
            raise ValueError("model already has a vehicle type")
        self._fleet = Fleet(num_vehicles=num_available, capacity=capacity)
        return self._fleet

    def add_edge(self, frm, to, distance: int, duration: int | None = None):
        try:
            i = self._loc_ids[id(frm)]
            j = self._loc_ids[id(to)]
        except KeyError:
            raise ValueError("edge endpoint not part of this model") from None
        if (i, j) in self._edges:
            raise ValueError(f"duplicate edge ({i}, {j})")
        if distance < 0 or (duration is not None and duration < 0):
            raise ValueError(f"negative edge weight ({i}, {j})")
        self._edges[(i, j)] = (distance, distance if duration is None else duration)

    def data(self) -> ProblemData:
        if self._depot is None:
            raise ValueError("depot undefined")
        if self._fleet is None:
            raise ValueError("fleet undefined")

        dim = len(self._clients) + 1
        dist = np.full((dim, dim), self._missing, dtype=np.int64)
        dur = np.full((dim, dim), self._missing, dtype=np.int64)
        np.fill_diagonal(dist, 0)
        np.fill_diagonal(dur, 0)
        for (i, j), (d, t) in self._edges.items():
            if i == j:
                continue
            dist[i, j] = d
            dur[i, j] = t
        return ProblemData(self._depot, self._clients, self._fleet, dist, dur)

    def solve(self, stop, seed: int = 0, config=None, collect_stats: bool = True):
        """Build the instance and run the genetic search on it."""
        from .config import SolverConfig
        from .genetic import run

        data = self.data()
        if config is None:
            config = SolverConfig.for_instance(data)
        return run(data, stop=stop, seed=seed, config=config, collect_stats=collect_stats)
