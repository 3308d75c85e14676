"""Selective route exchange: one offspring from two parent solutions.

A window of routes in parent A is replaced by a window of routes from
parent B. Window starts are chosen to minimise the symmetric difference of
the client sets the windows cover (scanning all start pairs, which stays
within a routesA x routesB evaluation budget); clients lost in the exchange
are greedily reinserted.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .search.state import SearchState
from .solution import Solution


class CrossoverOutcome(NamedTuple):
    offspring: Solution
    num_reinserted: int


def greedy_reinsert(data, evaluator, route_lists, unplanned) -> list[list[int]]:
    """Insert each unplanned client at its cheapest position (penalised
    cost), ties to the earliest route and slot. Opens an empty route when
    one is available and cheapest."""
    state = SearchState(data, evaluator)
    state.load_routes(route_lists)
    dist = state.dist
    demands = data.demands

    for client in sorted(unplanned):
        run = (client, client, 0, demands[client], state.at[client])
        best_delta = None
        best_route = None
        best_slot = None
        seen_empty = False
        for route in state.routes:
            if route.num_clients == 0:
                if seen_empty:
                    continue  # all empty routes are interchangeable
                seen_empty = True
            nodes = route.nodes
            load_new = route.load + demands[client]
            for q in range(route.num_clients + 1):
                d_new = (
                    route.dist
                    - dist[nodes[q]][nodes[q + 1]]
                    + dist[nodes[q]][client]
                    + dist[client][nodes[q + 1]]
                )
                tw_new = state.tw_insert(route, q, run) if state.tw_aware else 0
                delta = state.route_cost(d_new, load_new, tw_new) - route.cost
                if best_delta is None or delta < best_delta:
                    best_delta = delta
                    best_route = route
                    best_slot = q
        clients = best_route.nodes[1:-1]
        clients[best_slot:best_slot] = [client]
        state.set_route(best_route.idx, clients)

    return [r.nodes[1:-1] for r in state.routes if r.num_clients]


def srex(parent_a: Solution, parent_b: Solution, data, evaluator, rng) -> CrossoverOutcome:
    """Produce one offspring; deterministic given the rng state."""
    routes_a = sorted(parent_a.route_lists(), key=lambda r: r[0])
    routes_b = sorted(parent_b.route_lists(), key=lambda r: r[0])
    na = len(routes_a)
    nb = len(routes_b)
    window = rng.randint(1, min(na, nb))
    start_a = rng.randrange(na)
    start_b = rng.randrange(nb)
    start_a, start_b = _best_windows(data, routes_a, routes_b, window, start_a, start_b)

    in_window_a = {(start_a + i) % na for i in range(window)}
    imported = [list(routes_b[(start_b + i) % nb]) for i in range(window)]
    retained = [list(routes_a[i]) for i in range(na) if i not in in_window_a]

    all_clients = set(range(1, data.num_clients + 1))
    retained_clients = {c for r in retained for c in r}
    imported_clients = {c for r in imported for c in r}

    # Candidate 1 drops duplicated clients from the imported routes.
    imported_slim = [[c for c in r if c not in retained_clients] for r in imported]
    routes_1 = [list(r) for r in retained] + [r for r in imported_slim if r]
    missing_1 = all_clients - retained_clients - {c for r in imported_slim for c in r}
    routes_1 = greedy_reinsert(data, evaluator, routes_1, missing_1)

    # Candidate 2 drops them from the retained routes instead.
    retained_slim = [[c for c in r if c not in imported_clients] for r in retained]
    routes_2 = [r for r in retained_slim if r] + [list(r) for r in imported]
    missing_2 = all_clients - imported_clients - {c for r in retained_slim for c in r}
    routes_2 = greedy_reinsert(data, evaluator, routes_2, missing_2)

    cand_1 = Solution(data, routes_1)
    cand_2 = Solution(data, routes_2)
    if evaluator.penalised_cost(cand_2) < evaluator.penalised_cost(cand_1):
        return CrossoverOutcome(cand_2, len(missing_2))
    return CrossoverOutcome(cand_1, len(missing_1))


def _best_windows(data, routes_a, routes_b, window, start_a, start_b):
    """Start pair whose windows cover the most similar client sets; ties
    resolve to the scan order beginning at the random starts."""
    na = len(routes_a)
    nb = len(routes_b)

    # Overlap counts between single routes, then 2D circular window sums.
    route_of_b = {}
    for j, route in enumerate(routes_b):
        for client in route:
            route_of_b[client] = j
    overlap = np.zeros((na, nb), dtype=np.int64)
    for i, route in enumerate(routes_a):
        for client in route:
            j = route_of_b.get(client)
            if j is not None:
                overlap[i, j] += 1

    tiled = np.tile(overlap, (2, 2))
    pref = tiled.cumsum(axis=0).cumsum(axis=1)
    pref = np.pad(pref, ((1, 0), (1, 0)))

    size_a = np.array([len(r) for r in routes_a], dtype=np.int64)
    size_b = np.array([len(r) for r in routes_b], dtype=np.int64)
    win_a = [int(np.roll(size_a, -s)[:window].sum()) for s in range(na)]
    win_b = [int(np.roll(size_b, -s)[:window].sum()) for s in range(nb)]

    best = None
    for da in range(na):
        sa = (start_a + da) % na
        for db in range(nb):
            sb = (start_b + db) % nb
            inter = int(
                pref[sa + window, sb + window]
                - pref[sa, sb + window]
                - pref[sa + window, sb]
                + pref[sa, sb]
            )
            diff = win_a[sa] + win_b[sb] - 2 * inter
            if best is None or diff < best[0]:
                best = (diff, sa, sb)
                if diff == 0:
                    return sa, sb
    return best[1], best[2]
