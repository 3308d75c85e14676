"""Shared builders and independent oracles for the test suite.

The oracles deliberately avoid the library's segment algebra: time warp is
computed by simulating the earliest-start schedule and clamping late
arrivals, and costs are recomputed from raw matrices.
"""

from __future__ import annotations

import random

import numpy as np

from hgsvrp.model import TW_OPEN, Client, Depot, Fleet, ProblemData


# ---------------------------------------------------------------------------
# oracles


def schedule_time_warp(data, route) -> int:
    """Total lateness of the earliest-start schedule, clamping each late
    arrival back to the latest service start."""
    if not route:
        return 0
    warp = 0
    time = data.depot.tw_early
    prev = 0
    for client in route:
        arrival = time + data.duration(prev, client)
        early, late = data.tw_early[client], data.tw_late[client]
        if arrival > late:
            warp += arrival - late
            arrival = late
        begin = max(arrival, early)
        time = begin + data.services[client]
        prev = client
    arrival = time + data.duration(prev, 0)
    if arrival > data.depot.tw_late:
        warp += arrival - data.depot.tw_late
    return warp


def route_distance(data, route) -> int:
    if not route:
        return 0
    dist = data.distance(0, route[0])
    for a, b in zip(route, route[1:]):
        dist += data.distance(a, b)
    return dist + data.distance(route[-1], 0)


def route_load(data, route) -> int:
    return sum(data.demands[c] for c in route)


def solution_cost_oracle(data, routes, evaluator) -> int:
    """Penalised cost recomputed from scratch, one route at a time."""
    total = 0
    capacity = data.fleet.capacity
    for route in routes:
        if not route:
            continue
        excess = max(route_load(data, route) - capacity, 0)
        total += (
            route_distance(data, route)
            + evaluator.capacity_penalty * excess
            + evaluator.tw_penalty * schedule_time_warp(data, route)
        )
    return total


# ---------------------------------------------------------------------------
# instance builders


def make_instance(
    coords,
    demands=None,
    capacity=100,
    num_vehicles=None,
    windows=None,
    services=None,
    durations=None,
    depot_window=None,
) -> ProblemData:
    """Instance from explicit coordinates; distances are rounded Euclidean."""
    coords = np.asarray(coords)
    n = len(coords) - 1
    diff = coords[:, None, :] - coords[None, :, :]
    dist = np.floor(np.sqrt((diff.astype(np.float64) ** 2).sum(-1)) + 0.5).astype(np.int64)

    demands = demands or [0] * (n + 1)
    services = services or [0] * (n + 1)
    windows = windows or [(0, TW_OPEN)] * (n + 1)
    if depot_window:
        windows = [depot_window] + list(windows[1:])

    depot = Depot(
        x=int(coords[0][0]), y=int(coords[0][1]),
        tw_early=windows[0][0], tw_late=windows[0][1],
    )
    clients = [
        Client(
            index=i,
            x=int(coords[i][0]),
            y=int(coords[i][1]),
            demand=demands[i],
            service_duration=services[i],
            tw_early=windows[i][0],
            tw_late=windows[i][1],
        )
        for i in range(1, n + 1)
    ]
    fleet = Fleet(num_vehicles=num_vehicles or n, capacity=capacity)
    dur = dist if durations is None else np.asarray(durations, dtype=np.int64)
    return ProblemData(depot, clients, fleet, dist, dur)


def random_cvrp(rng: random.Random, n: int, num_vehicles=None, span=1000) -> ProblemData:
    coords = [(rng.randrange(span), rng.randrange(span)) for _ in range(n + 1)]
    demands = [0] + [rng.randint(1, 10) for _ in range(n)]
    vehicles = num_vehicles or max(2, n // 4)
    capacity = max(12, int(sum(demands) / max(vehicles - 1, 1)))
    return make_instance(
        coords, demands=demands, capacity=capacity, num_vehicles=vehicles
    )


def random_vrptw(
    rng: random.Random, n: int, num_vehicles=None, span=200, asymmetric=False
) -> ProblemData:
    """Random instance with integer windows tight enough to matter."""
    coords = [(rng.randrange(span), rng.randrange(span)) for _ in range(n + 1)]
    demands = [0] + [rng.randint(1, 10) for _ in range(n)]
    horizon = span * 12
    windows = [(0, horizon)]
    for _ in range(n):
        early = rng.randrange(0, horizon // 2)
        windows.append((early, early + rng.randrange(span // 2, horizon // 2)))
    services = [0] + [rng.randint(0, 20) for _ in range(n)]
    vehicles = num_vehicles or max(2, n // 3)
    capacity = max(12, int(sum(demands) / max(vehicles - 1, 1)))
    durations = None
    if asymmetric:
        dim = n + 1
        diff = np.asarray(coords)[:, None, :] - np.asarray(coords)[None, :, :]
        base = np.floor(np.sqrt((diff.astype(np.float64) ** 2).sum(-1)) + 0.5)
        jitter = np.array(
            [[rng.randrange(0, span // 4) for _ in range(dim)] for _ in range(dim)]
        )
        durations = (base + jitter).astype(np.int64)
        np.fill_diagonal(durations, 0)
    return make_instance(
        coords,
        demands=demands,
        capacity=capacity,
        num_vehicles=vehicles,
        windows=windows,
        services=services,
        durations=durations,
    )


def random_routes(rng: random.Random, data) -> list[list[int]]:
    """A random partition of the clients over at most the fleet's routes."""
    clients = list(range(1, data.num_clients + 1))
    rng.shuffle(clients)
    k = rng.randint(1, data.fleet.num_vehicles)
    routes = [clients[i::k] for i in range(k)]
    return [r for r in routes if r]
