"""Every operator's evaluated delta against from-scratch recomputation."""

import random

import pytest

from hgsvrp.costs import CostEvaluator
from hgsvrp.search import (
    Exchange,
    MoveTwoClientsReversed,
    RelocateStar,
    SearchState,
    SwapStar,
    TwoOpt,
)

from helpers import (
    make_instance,
    random_cvrp,
    random_routes,
    random_vrptw,
    solution_cost_oracle,
)

EV = CostEvaluator(20, 6)

NODE_OPS = [
    Exchange(1, 0),
    Exchange(2, 0),
    Exchange(3, 0),
    MoveTwoClientsReversed(),
    Exchange(1, 1),
    Exchange(2, 1),
    Exchange(2, 2),
    Exchange(3, 2),
    Exchange(3, 3),
    TwoOpt(),
]


def sweep_exact_deltas(data, routes, ops, evaluator=EV):
    """Evaluate every (u, v) pair for every operator and check the applied
    move's cost change from scratch. Returns how many moves were checked."""
    n = data.num_clients
    before = solution_cost_oracle(data, routes, evaluator)
    checked = 0
    state = SearchState(data, evaluator)
    for op in ops:
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                if u == v:
                    continue
                state.load_routes(routes)
                delta = op.evaluate(state, u, v, prune=False)
                if delta is None:
                    continue
                op.apply(state, u, v)
                after_routes = [r.nodes[1:-1] for r in state.routes if r.num_clients]
                after = solution_cost_oracle(data, after_routes, evaluator)
                assert after - before == delta, (
                    f"{op.name} on u={u}, v={v}: claimed {delta}, got {after - before}"
                )
                assert state.total_cost == after  # cache stays consistent
                assert sorted(c for r in after_routes for c in r) == list(range(1, n + 1))
                checked += 1
    return checked


@pytest.mark.parametrize("seed", range(4))
def test_node_ops_exact_on_cvrp(seed):
    rng = random.Random(seed)
    data = random_cvrp(rng, n=9, num_vehicles=4)
    for _ in range(2):
        routes = random_routes(rng, data)
        assert sweep_exact_deltas(data, routes, NODE_OPS) > 100


@pytest.mark.parametrize("seed", range(4))
def test_node_ops_exact_on_vrptw(seed):
    rng = random.Random(seed + 100)
    data = random_vrptw(rng, n=9, num_vehicles=4)
    for _ in range(2):
        routes = random_routes(rng, data)
        assert sweep_exact_deltas(data, routes, NODE_OPS) > 100


@pytest.mark.parametrize("seed", range(3))
def test_node_ops_exact_on_asymmetric_durations(seed):
    rng = random.Random(seed + 500)
    data = random_vrptw(rng, n=8, num_vehicles=3, asymmetric=True)
    routes = random_routes(rng, data)
    assert sweep_exact_deltas(data, routes, NODE_OPS) > 50


def test_relocate_after_predecessor_is_noop():
    data = make_instance(
        [(0, 0), (1, 0), (2, 0), (3, 0)], demands=[0, 1, 1, 1], num_vehicles=2
    )
    state = SearchState(data, EV)
    state.load_routes([[1, 2, 3]])
    assert Exchange(1, 0).evaluate(state, 2, 1, prune=False) == 0


def test_single_route_relocates_match_oracle_everywhere():
    data = make_instance(
        [(0, 0), (5, 1), (2, 7), (8, 3)], demands=[0, 1, 1, 1], num_vehicles=1
    )
    assert sweep_exact_deltas(data, [[1, 2, 3]], [Exchange(1, 0)]) >= 4


def test_mtcr_reversal_costless_in_mirror_geometry():
    # u and its successor mirror about the axis through predecessor and next.
    data = make_instance(
        [(0, 0), (10, 10), (10, -10), (20, 0), (40, 0)],
        demands=[0, 1, 1, 1, 1],
        num_vehicles=2,
    )
    state = SearchState(data, EV)
    state.load_routes([[1, 2, 3], [4]])
    # relocating [1, 2] reversed to sit after the depot again: same geometry
    delta = MoveTwoClientsReversed().evaluate(state, 1, 3, prune=False)
    oracle_routes = [[2, 1, 3], [4]]
    assert delta == solution_cost_oracle(data, oracle_routes, EV) - solution_cost_oracle(
        data, [[1, 2, 3], [4]], EV
    )


def test_two_opt_tail_swap_of_empty_tails_is_zero():
    data = make_instance(
        [(0, 0), (3, 0), (0, 3)], demands=[0, 1, 1], num_vehicles=2
    )
    state = SearchState(data, EV)
    state.load_routes([[1], [2]])
    assert TwoOpt().evaluate(state, 1, 2, prune=False) == 0


def test_two_opt_within_route_boundary_arcs_only():
    data = make_instance(
        [(0, 0), (0, 10), (10, 10), (10, 0), (20, 0)],
        demands=[0, 1, 1, 1, 1],
        num_vehicles=1,
    )
    state = SearchState(data, EV)
    state.load_routes([[1, 2, 3, 4]])
    delta = TwoOpt().evaluate(state, 1, 4, prune=False)
    d = data.distance
    expected = (d(1, 4) + d(2, 0)) - (d(1, 2) + d(4, 0))
    assert delta == expected


def test_two_opt_between_routes_includes_load_penalty():
    data = make_instance(
        [(0, 0), (1, 0), (2, 0), (1, 5), (2, 5)],
        demands=[0, 6, 6, 1, 1],
        capacity=10,
        num_vehicles=2,
    )
    state = SearchState(data, EV)
    routes = [[1, 2], [3, 4]]  # first route overloaded by 2
    state.load_routes(routes)
    before = solution_cost_oracle(data, routes, EV)
    delta = TwoOpt().evaluate(state, 1, 3, prune=False)
    after = solution_cost_oracle(data, [[1, 4], [3, 2]], EV)
    assert delta == after - before


# ---------------------------------------------------------------------------
# empty-route placements


@pytest.mark.parametrize("seed", range(3))
def test_empty_route_placements_exact(seed):
    rng = random.Random(seed + 40)
    data = random_vrptw(rng, n=8, num_vehicles=6)
    routes = [r for r in random_routes(rng, data)][:3]
    missing = set(range(1, 9)) - {c for r in routes for c in r}
    if missing:
        routes.append(sorted(missing))
    before = solution_cost_oracle(data, routes, EV)
    state = SearchState(data, EV)
    for op in [Exchange(1, 0), Exchange(2, 0), Exchange(3, 0), MoveTwoClientsReversed()]:
        for u in range(1, 9):
            state.load_routes(routes)
            empty = state.first_empty_route()
            assert empty is not None
            delta = op.evaluate_into_empty(state, u, empty, prune=False)
            if delta is None:
                continue
            op.apply_into_empty(state, u, empty)
            after_routes = [r.nodes[1:-1] for r in state.routes if r.num_clients]
            after = solution_cost_oracle(data, after_routes, EV)
            assert after - before == delta


# ---------------------------------------------------------------------------
# route operators


def apply_and_recompute(data, state, op, move, routes_before, evaluator=EV):
    before = solution_cost_oracle(data, routes_before, evaluator)
    op.apply_move(state, move)
    after_routes = [r.nodes[1:-1] for r in state.routes if r.num_clients]
    return solution_cost_oracle(data, after_routes, evaluator) - before


def relocate_star_oracle(data, evaluator, routes, i, j):
    """Best single-client relocation between routes i and j, brute force."""
    best = 0
    for src, dst in ((i, j), (j, i)):
        for a, client in enumerate(routes[src]):
            reduced = routes[src][:a] + routes[src][a + 1 :]
            for slot in range(len(routes[dst]) + 1):
                grown = routes[dst][:slot] + [client] + routes[dst][slot:]
                candidate = [
                    grown if k == dst else (reduced if k == src else r)
                    for k, r in enumerate(routes)
                ]
                delta = solution_cost_oracle(data, candidate, evaluator) - (
                    solution_cost_oracle(data, routes, evaluator)
                )
                best = min(best, delta)
    return best


@pytest.mark.parametrize("seed", range(6))
def test_relocate_star_matches_bruteforce(seed):
    rng = random.Random(seed + 7)
    data = (random_cvrp if seed % 2 else random_vrptw)(rng, n=9, num_vehicles=3)
    routes = random_routes(rng, data)
    if len(routes) < 2:
        routes = [routes[0][:4], routes[0][4:]]
        routes = [r for r in routes if r]
    state = SearchState(data, EV)
    state.load_routes(routes)
    r1, r2 = state.nonempty_routes()[:2]
    op = RelocateStar()
    delta, move = op.best(state, r1, r2)
    i1 = [k for k, r in enumerate(routes) if r == r1.nodes[1:-1]][0]
    i2 = [k for k, r in enumerate(routes) if r == r2.nodes[1:-1]][0]
    assert delta == relocate_star_oracle(data, EV, routes, i1, i2)
    if move is not None:
        realised = apply_and_recompute(data, state, op, move, routes)
        assert realised == delta


def swap_star_candidates(routes_map, rm_idx, tops):
    """Mirror of the operator's candidate-slot rule, for the oracle."""
    cands = [rm_idx - 1]
    for _, q in tops:
        if q != rm_idx - 1 and q != rm_idx:
            cands.append(q)
    return cands


def swap_star_oracle(data, evaluator, routes, i, j):
    """Pruned-semantics mirror: same candidate slots, cost from scratch.

    The operator restricts each reinsertion to the two distance-cheapest
    slots plus the vacated one, so an exhaustive all-slots oracle can
    disagree; this mirror reproduces the documented candidate rule.
    """
    base = solution_cost_oracle(data, routes, evaluator)
    r1, r2 = routes[i], routes[j]

    def top2(route, client):
        costs = []
        seq = [0] + route + [0]
        for q in range(len(route) + 1):
            costs.append(
                (
                    data.distance(seq[q], client)
                    + data.distance(client, seq[q + 1])
                    - data.distance(seq[q], seq[q + 1]),
                    q,
                )
            )
        costs.sort()
        return costs[:2]

    best = 0
    for a in range(1, len(r1) + 1):
        u = r1[a - 1]
        for b in range(1, len(r2) + 1):
            v = r2[b - 1]
            best_pair = None
            for q1 in swap_star_candidates(routes, a, top2(r1, v)):
                for q2 in swap_star_candidates(routes, b, top2(r2, u)):
                    c1 = r1[: a - 1] + r1[a:]
                    k1 = q1 if q1 < a else q1 - 1
                    c1 = c1[:k1] + [v] + c1[k1:]
                    c2 = r2[: b - 1] + r2[b:]
                    k2 = q2 if q2 < b else q2 - 1
                    c2 = c2[:k2] + [u] + c2[k2:]
                    candidate = [
                        c1 if k == i else (c2 if k == j else r)
                        for k, r in enumerate(routes)
                    ]
                    cost = solution_cost_oracle(data, candidate, evaluator)
                    if best_pair is None or cost < best_pair:
                        best_pair = cost
            best = min(best, best_pair - base)
    return best


@pytest.mark.parametrize("seed", range(6))
def test_swap_star_matches_pruned_semantics_oracle(seed):
    rng = random.Random(seed + 70)
    data = (random_cvrp if seed % 2 else random_vrptw)(rng, n=10, num_vehicles=2)
    clients = list(range(1, 11))
    rng.shuffle(clients)
    cut = rng.randint(3, 7)
    routes = [clients[:cut], clients[cut:]]
    state = SearchState(data, EV)
    state.load_routes(routes)
    r1, r2 = state.nonempty_routes()
    op = SwapStar()
    delta, move = op.best(state, r1, r2)
    oracle = swap_star_oracle(data, EV, routes, 0, 1)
    assert delta == oracle
    if move is not None:
        realised = apply_and_recompute(data, state, op, move, routes)
        assert realised == delta


def test_swap_star_identical_clients_mirrored_routes():
    data = make_instance(
        [(0, 0), (5, 5), (5, -5)], demands=[0, 2, 2], num_vehicles=2
    )
    state = SearchState(data, EV)
    state.load_routes([[1], [2]])
    r1, r2 = state.nonempty_routes()
    delta, _ = SwapStar().best(state, r1, r2)
    assert delta == 0  # swapping mirror-image singletons changes nothing


def test_relocate_star_moves_load_out_of_overloaded_route():
    data = make_instance(
        [(0, 0), (1, 0), (1, 1), (50, 50)],
        demands=[0, 6, 6, 1],
        capacity=10,
        num_vehicles=2,
    )
    routes = [[1, 2], [3]]
    state = SearchState(data, EV)
    state.load_routes(routes)
    r1, r2 = state.nonempty_routes()
    delta, move = RelocateStar().best(state, r1, r2)
    assert move is not None and delta < 0
    realised = apply_and_recompute(data, state, RelocateStar(), move, routes)
    assert realised == delta
