"""Granular local search: first-improving node moves, then route moves.

The search sweeps clients in a random order fixed per run. For each client u
it tries every node operator against each neighbour v of u, applying the
first strictly improving move. Moves into an empty route are only tried once
client-pair moves are exhausted; route operators run after that, and the
whole cycle repeats until nothing improves.

Pairs whose two routes are unchanged since their last evaluation are skipped
(the evaluation would be identical), which keeps later sweeps cheap. With
the default operator set a fused evaluator handles the pair loop; it
produces the same moves as the operator list, just faster.
"""

from __future__ import annotations

from . import fused
from .node_ops import Exchange, MoveTwoClientsReversed, TwoOpt
from .route_ops import RelocateStar, SwapStar
from .state import SearchState


def default_node_operators() -> list:
    return [
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


def default_route_operators() -> list:
    return [RelocateStar(), SwapStar()]


class LocalSearch:
    def __init__(self, data, neighbours, node_ops=None, route_ops=None):
        self.data = data
        self.neighbours = neighbours
        self._use_fused = node_ops is None
        self.node_ops = default_node_operators() if node_ops is None else list(node_ops)
        self.route_ops = default_route_operators() if route_ops is None else list(route_ops)
        if not self.node_ops:
            raise ValueError("need at least one node operator")
        self.empty_ops = [op for op in self.node_ops if getattr(op, "supports_empty", False)]
        self.neigh_sets = [frozenset(lst) for lst in neighbours]
        # a swap of equal-length segments is its own mirror image; evaluate
        # it from one side only when the mirrored pair is also in scope
        self._symmetric = [
            getattr(op, "m", 0) == getattr(op, "n", -1) and getattr(op, "m", 0) > 0
            for op in self.node_ops
        ]


    def run(self, solution, evaluator, rng):
        """Improve ``solution`` until no operator finds an improving move."""
        state = SearchState(self.data, evaluator)
        state.load_solution(solution)

        order = list(range(1, self.data.num_clients + 1))
        rng.shuffle(order)

        stamps = [[-1] * len(self.neighbours[u]) for u in range(self.data.num_clients + 1)]
        pair_stamps: dict[tuple[int, int], int] = {}
        while True:
            if self._node_pass(state, order, stamps):
                continue
            if self._empty_route_pass(state, order):
                continue
            if not self._route_pass(state, pair_stamps):
                break
        return state.to_solution()

    # -- phases ---------------------------------------------------------------

    def _node_pass(self, state, order, stamps) -> bool:
        routes = state.routes
        route_of = state.route_of
        pos_of = state.pos_of
        neighbours = self.neighbours
        neigh_sets = self.neigh_sets
        use_fused = self._use_fused
        same_route = fused._try_same_route
        between = fused._try_between_routes
        improved = False
        for u in order:
            u_stamps = stamps[u]
            ru = routes[route_of[u]]
            mod_u = ru.mod
            for j, v in enumerate(neighbours[u]):
                rv = routes[route_of[v]]
                mod_v = rv.mod
                mod = mod_u if mod_u > mod_v else mod_v
                if mod <= u_stamps[j]:
                    continue
                if use_fused:
                    if ru is rv:
                        applied = same_route(
                            state, ru, u, pos_of[u], v, pos_of[v], neigh_sets
                        )
                    else:
                        applied = between(
                            state, ru, u, pos_of[u], rv, v, pos_of[v], neigh_sets
                        )
                else:
                    applied = self._try_pair_generic(state, u, v)
                if applied:
                    improved = True
                    ru = routes[route_of[u]]
                    mod_u = ru.mod
                else:
                    u_stamps[j] = mod
        return improved

    def _try_pair_generic(self, state, u, v) -> bool:
        for op, symmetric in zip(self.node_ops, self._symmetric):
            if symmetric and u > v and u in self.neigh_sets[v]:
                continue
            delta = op.evaluate(state, u, v)
            if delta is not None and delta < 0:
                op.apply(state, u, v)
                return True
        return False

    def _empty_route_pass(self, state, order) -> bool:
        improved = False
        for u in order:
            empty = state.first_empty_route()
            if empty is None:
                break
            for op in self.empty_ops:
                delta = op.evaluate_into_empty(state, u, empty)
                if delta is not None and delta < 0:
                    op.apply_into_empty(state, u, empty)
                    improved = True
                    break
        return improved

    def _route_pass(self, state, pair_stamps) -> bool:
        if not self.route_ops:
            return False
        improved = False
        nonempty = state.nonempty_routes()
        for i in range(len(nonempty)):
            r1 = nonempty[i]
            for j in range(i + 1, len(nonempty)):
                r2 = nonempty[j]
                if not r1.num_clients or not r2.num_clients:
                    continue
                key = (r1.idx, r2.idx)
                mod = r1.mod if r1.mod > r2.mod else r2.mod
                if mod <= pair_stamps.get(key, -1):
                    continue
                if r1.feasible and r2.feasible:
                    # routes whose bounding circles do not meet cannot trade
                    # clients profitably; skip the pair
                    dx = r1.cx - r2.cx
                    dy = r1.cy - r2.cy
                    reach = r1.radius + r2.radius
                    if dx * dx + dy * dy > reach * reach:
                        pair_stamps[key] = mod
                        continue
                for op in self.route_ops:
                    while r1.num_clients and r2.num_clients:
                        delta, move = op.best(state, r1, r2)
                        if move is None or delta >= 0:
                            break
                        op.apply_move(state, move)
                        improved = True
                pair_stamps[key] = r1.mod if r1.mod > r2.mod else r2.mod
        return improved

    # -- post-run verification -------------------------------------------------

    def find_improving_node_move(self, solution, evaluator):
        """Scan all (u, v in N(u)) node moves; return the first improving one
        as (op, u, v, delta), or None. Used to verify local optimality."""
        state = SearchState(self.data, evaluator)
        state.load_solution(solution)
        for u in range(1, self.data.num_clients + 1):
            for v in self.neighbours[u]:
                for op in self.node_ops:
                    delta = op.evaluate(state, u, v)
                    if delta is not None and delta < 0:
                        return op, u, v, delta
        return None


def ls_run(data, solution, evaluator, neighbourhood, rng, node_ops=None, route_ops=None):
    """One-shot local search round trip; see :class:`LocalSearch`."""
    search = LocalSearch(data, neighbourhood, node_ops, route_ops)
    return search.run(solution, evaluator, rng)
