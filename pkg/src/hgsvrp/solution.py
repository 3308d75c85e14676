"""Route-set solutions with cached statistics and the diversity measure."""

from __future__ import annotations

from .segments import route_stats


class Route:
    """An ordered client visit sequence with cached statistics."""

    __slots__ = ("clients", "distance", "load", "time_warp")

    def __init__(self, data, clients):
        self.clients = tuple(clients)
        self.distance, self.load, self.time_warp = route_stats(self.clients, data)

    def __len__(self):
        return len(self.clients)

    def __iter__(self):
        return iter(self.clients)

    def __repr__(self):
        return f"Route({list(self.clients)})"


class Solution:
    """A complete solution: every client in exactly one route.

    Empty routes are not stored. Instances are immutable once built and may
    be shared freely between runs.
    """

    __slots__ = (
        "routes",
        "distance",
        "excess_load",
        "time_warp",
        "is_feasible",
        "successors",
        "num_clients",
    )

    def __init__(self, data, route_lists):
        capacity = data.fleet.capacity
        n = data.num_clients

        routes = [Route(data, r) for r in route_lists if r]
        if len(routes) > data.fleet.num_vehicles:
            raise ValueError(
                f"too many routes: {len(routes)} > {data.fleet.num_vehicles} vehicles"
            )

        succ = [0] * (n + 1)
        seen = [False] * (n + 1)
        for route in routes:
            clients = route.clients
            for pos, client in enumerate(clients):
                if not 1 <= client <= n:
                    raise ValueError(f"unknown client {client}")
                if seen[client]:
                    raise ValueError(f"duplicate client {client}")
                seen[client] = True
                succ[client] = clients[pos + 1] if pos + 1 < len(clients) else 0
        for client in range(1, n + 1):
            if not seen[client]:
                raise ValueError(f"missing client {client}")

        self.routes = tuple(routes)
        self.successors = tuple(succ)
        self.num_clients = n
        self.distance = sum(r.distance for r in routes)
        self.excess_load = sum(max(r.load - capacity, 0) for r in routes)
        self.time_warp = sum(r.time_warp for r in routes)
        self.is_feasible = self.excess_load == 0 and self.time_warp == 0

    @property
    def num_routes(self) -> int:
        return len(self.routes)

    def route_lists(self) -> list[list[int]]:
        return [list(r.clients) for r in self.routes]

    def __repr__(self):
        tag = "feasible" if self.is_feasible else "infeasible"
        return f"Solution({self.num_routes} routes, distance={self.distance}, {tag})"


def make_solution(data, route_lists) -> Solution:
    """Validate ``route_lists`` as a partition of the clients and cache stats."""
    return Solution(data, route_lists)


def random_solution(data, rng) -> Solution:
    """Shuffle clients uniformly and deal them round-robin over the fleet."""
    clients = list(range(1, data.num_clients + 1))
    rng.shuffle(clients)
    k = data.fleet.num_vehicles
    return Solution(data, [clients[i::k] for i in range(k)])


def broken_pairs_distance(a: Solution, b: Solution) -> float:
    """Fraction of clients whose successor differs between two solutions.

    A route's last client counts the depot as its successor. Directed: only
    successors are compared.
    """
    sa = a.successors
    sb = b.successors
    n = a.num_clients
    broken = sum(1 for i in range(1, n + 1) if sa[i] != sb[i])
    return broken / n
