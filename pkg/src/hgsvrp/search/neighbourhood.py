"""Granular neighbourhood: k spatio-temporally close clients per client."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class NeighbourhoodParams:
    num_neighbours: int = 40
    weight_wait_time: float = 0.2
    weight_time_warp: float = 1.0
    symmetric_proximity: bool = True
    symmetric_neighbours: bool = False

    def validate(self):
        if self.num_neighbours < 1:
            raise ValueError("need at least one neighbour per client")
        if self.weight_wait_time < 0 or self.weight_time_warp < 0:
            raise ValueError("proximity weights must be non-negative")


def compute_neighbours(data, params: NeighbourhoodParams | None = None) -> list[list[int]]:
    """Per-client neighbour lists (index 0 unused), nearest first.

    Proximity of v to u is the travel distance plus weighted estimates of the
    wait and time warp incurred by serving v directly after u.
    """
    params = params or NeighbourhoodParams()
    params.validate()

    n = data.num_clients
    dist = data.distance_matrix()[1:, 1:].astype(np.float64)
    dur = data.duration_matrix()[1:, 1:].astype(np.float64)

    early = np.array(data.tw_early[1:], dtype=np.float64)
    late = np.array(data.tw_late[1:], dtype=np.float64)
    service = np.array(data.services[1:], dtype=np.float64)

    wait = early[None, :] - dur - service[:, None] - late[:, None]
    warp = early[:, None] + service[:, None] + dur - late[None, :]
    prox = (
        dist
        + params.weight_wait_time * np.maximum(wait, 0)
        + params.weight_time_warp * np.maximum(warp, 0)
    )
    if params.symmetric_proximity:
        prox = np.minimum(prox, prox.T)
    np.fill_diagonal(prox, np.inf)

    k = min(params.num_neighbours, n - 1)
    neighbours: list[list[int]] = [[] for _ in range(n + 1)]
    idx = np.arange(1, n + 1)
    for u in range(1, n + 1):
        row = prox[u - 1]
        order = np.lexsort((idx, row))
        neighbours[u] = [int(i) + 1 for i in order[:k]]

    if params.symmetric_neighbours:
        sets = [set(lst) for lst in neighbours]
        for u in range(1, n + 1):
            for v in neighbours[u]:
                if u not in sets[v]:
                    sets[v].add(u)
                    neighbours[v].append(u)
        for u in range(1, n + 1):
            neighbours[u].sort(key=lambda v: (prox[u - 1][v - 1], v))
    return neighbours
