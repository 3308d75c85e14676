"""Mutable working copy of a solution used during local search.

Each route caches prefix/suffix duration segments and cumulative distance
and load arrays, so operators evaluate most moves in O(1). Mid-route pieces
(needed by within-route moves) are folded on demand.

Position convention: a route with k clients spans positions 0..k+1, where
positions 0 and k+1 are the depot and positions 1..k hold the clients.
"""

from __future__ import annotations

from ..segments import DurationSegment, concat
from ..solution import Solution


class RouteState:
    __slots__ = (
        "idx",
        "nodes",
        "num_clients",
        "dist",
        "load",
        "tw",
        "excess",
        "feasible",
        "cost",
        "cum_dist",
        "cum_load",
        "before",
        "after",
        "mod",
        "cx",
        "cy",
        "radius",
        "sig",
    )

    def __repr__(self):
        return f"RouteState({self.nodes[1:-1]}, cost={self.cost})"


class SearchState:
    """Routes, client position maps, and cached penalised costs."""

    def __init__(self, data, evaluator):
        self.data = data
        self.evaluator = evaluator
        self.dist = data.dist_rows
        self.dur = data.dur_rows
        self.capacity = data.fleet.capacity
        self.cap_pen = evaluator.capacity_penalty
        self.tw_pen = evaluator.tw_penalty
        self.tw_aware = data.has_time_component

        n = data.num_clients
        self.at: list[DurationSegment] = [
            DurationSegment(0, 0, data.depot.tw_early, data.depot.tw_late)
        ]
        for c in range(1, n + 1):
            self.at.append(
                DurationSegment(
                    data.services[c], 0, data.tw_early[c], data.tw_late[c]
                )
            )
        self.xs = [data.depot.x] + [c.x for c in data.clients]
        self.ys = [data.depot.y] + [c.y for c in data.clients]

        self.routes: list[RouteState] = []
        for idx in range(data.fleet.num_vehicles):
            route = RouteState()
            route.idx = idx
            route.mod = 0
            self.routes.append(route)
        self.route_of = [0] * (n + 1)
        self.pos_of = [0] * (n + 1)
        self.mod_count = 0
        self.total_cost = 0

    # -- loading / extracting ----------------------------------------------

    def load_solution(self, solution: Solution):
        self.load_routes(solution.route_lists())

    def load_routes(self, route_lists):
        """Fill the fleet's route slots; clients need not be complete."""
        lists = list(route_lists)
        if len(lists) > len(self.routes):
            raise ValueError("more routes than vehicles")
        lists += [[] for _ in range(len(self.routes) - len(lists))]
        self.total_cost = 0
        for idx, clients in enumerate(lists):
            self._fill_route(self.routes[idx], clients)
            self.total_cost += self.routes[idx].cost

    def to_solution(self) -> Solution:
        return Solution(self.data, [r.nodes[1:-1] for r in self.routes if r.num_clients])

    def set_route(self, idx: int, clients: list[int]):
        route = self.routes[idx]
        self.total_cost -= route.cost
        self._fill_route(route, clients)
        self.total_cost += route.cost
        self.mod_count += 1
        route.mod = self.mod_count

    def _fill_route(self, route: RouteState, clients):
        data = self.data
        dist = self.dist
        dur = self.dur
        at = self.at
        demands = data.demands

        nodes = [0] + list(clients) + [0]
        k = len(clients)
        route.nodes = nodes
        route.num_clients = k
        route.sig = hash(tuple(nodes))

        cum_dist = [0] * (k + 2)
        cum_load = [0] * (k + 2)
        for p in range(1, k + 2):
            prev, here = nodes[p - 1], nodes[p]
            cum_dist[p] = cum_dist[p - 1] + dist[prev][here]
            cum_load[p] = cum_load[p - 1] + demands[here]
        route.cum_dist = cum_dist
        route.cum_load = cum_load
        route.dist = cum_dist[k + 1]
        route.load = cum_load[k + 1]

        if self.tw_aware:
            before = [at[0]] * (k + 2)
            for p in range(1, k + 2):
                before[p] = concat(before[p - 1], at[nodes[p]], dur[nodes[p - 1]][nodes[p]])
            after = [at[0]] * (k + 2)
            for p in range(k, -1, -1):
                after[p] = concat(at[nodes[p]], after[p + 1], dur[nodes[p]][nodes[p + 1]])
            route.before = before
            route.after = after
            route.tw = before[k + 1].time_warp
        else:
            route.before = None
            route.after = None
            route.tw = 0

        for pos, client in enumerate(clients, start=1):
            self.route_of[client] = route.idx
            self.pos_of[client] = pos

        excess = route.load - self.capacity
        route.excess = excess if excess > 0 else 0
        route.feasible = route.excess == 0 and route.tw == 0
        route.cost = route.dist + self.cap_pen * route.excess + self.tw_pen * route.tw

        if k:  # bounding circle, used to skip hopeless route pairs
            xs = self.xs
            ys = self.ys
            cx = sum(xs[c] for c in clients) / k
            cy = sum(ys[c] for c in clients) / k
            route.cx = cx
            route.cy = cy
            route.radius = max(
                (xs[c] - cx) ** 2 + (ys[c] - cy) ** 2 for c in clients
            ) ** 0.5
        else:
            route.cx = route.cy = 0.0
            route.radius = 0.0

    # -- generic cost pieces -------------------------------------------------

    def route_cost(self, dist: int, load: int, tw: int) -> int:
        excess = load - self.capacity
        if excess < 0:
            excess = 0
        return dist + self.cap_pen * excess + self.tw_pen * tw

    def first_empty_route(self) -> RouteState | None:
        for route in self.routes:
            if route.num_clients == 0:
                return route
        return None

    def nonempty_routes(self) -> list[RouteState]:
        return [r for r in self.routes if r.num_clients]

    # -- run segments (moved pieces of <= a few nodes) -----------------------

    def run_forward(self, route: RouteState, a: int, b: int):
        """(first, last, internal distance, load, duration segment) of
        positions a..b visited in route order."""
        nodes = route.nodes
        seg = None
        if self.tw_aware:
            at = self.at
            dur = self.dur
            seg = at[nodes[a]]
            for p in range(a + 1, b + 1):
                seg = concat(seg, at[nodes[p]], dur[nodes[p - 1]][nodes[p]])
        return (
            nodes[a],
            nodes[b],
            route.cum_dist[b] - route.cum_dist[a],
            route.cum_load[b] - route.cum_load[a - 1],
            seg,
        )

    def run_reversed(self, route: RouteState, a: int, b: int):
        """Like :meth:`run_forward` but visiting positions b down to a."""
        nodes = route.nodes
        dist = self.dist
        internal = 0
        for p in range(a, b):
            internal += dist[nodes[p + 1]][nodes[p]]
        seg = None
        if self.tw_aware:
            at = self.at
            dur = self.dur
            seg = at[nodes[b]]
            for p in range(b - 1, a - 1, -1):
                seg = concat(seg, at[nodes[p]], dur[nodes[p + 1]][nodes[p]])
        return (
            nodes[b],
            nodes[a],
            internal,
            route.cum_load[b] - route.cum_load[a - 1],
            seg,
        )

    # -- time-warp folds ------------------------------------------------------
    # Each returns the total time warp of the modified route. Callers handle
    # distance and load arithmetic themselves (cheaper, and prunable).

    def _mid(self, route: RouteState, i: int, j: int):
        """Piece (first, last, segment) covering positions i..j unchanged."""
        nodes = route.nodes
        at = self.at
        dur = self.dur
        seg = at[nodes[i]]
        for p in range(i + 1, j + 1):
            seg = concat(seg, at[nodes[p]], dur[nodes[p - 1]][nodes[p]])
        return nodes[i], nodes[j], seg

    def _fold(self, pieces) -> int:
        dur = self.dur
        _, last, seg = pieces[0]
        for first, nxt_last, nxt_seg in pieces[1:]:
            seg = concat(seg, nxt_seg, dur[last][first])
            last = nxt_last
        return seg.time_warp

    def tw_remove(self, route: RouteState, a: int, b: int) -> int:
        """Warp after dropping positions a..b."""
        nodes = route.nodes
        return concat(
            route.before[a - 1], route.after[b + 1], self.dur[nodes[a - 1]][nodes[b + 1]]
        ).time_warp

    def tw_insert(self, route: RouteState, q: int, run) -> int:
        """Warp after inserting ``run`` after position q."""
        nodes = route.nodes
        first, last, _, _, seg = run
        dur = self.dur
        merged = concat(route.before[q], seg, dur[nodes[q]][first])
        return concat(merged, route.after[q + 1], dur[last][nodes[q + 1]]).time_warp

    def tw_replace(self, route: RouteState, a: int, b: int, run) -> int:
        """Warp after replacing positions a..b with ``run``."""
        nodes = route.nodes
        first, last, _, _, seg = run
        dur = self.dur
        merged = concat(route.before[a - 1], seg, dur[nodes[a - 1]][first])
        return concat(merged, route.after[b + 1], dur[last][nodes[b + 1]]).time_warp

    def tw_move_within(self, route: RouteState, a: int, b: int, q: int, run) -> int:
        """Warp after removing positions a..b and inserting ``run`` after
        position q of the same route (q outside [a-1, b] means a real shift;
        q == a-1 degenerates to replacement)."""
        first, last, _, _, seg = run
        run_piece = (first, last, seg)
        if q == a - 1:
            return self.tw_replace(route, a, b, run)
        if q < a - 1:
            pieces = [
                (route.nodes[0], route.nodes[q], route.before[q]),
                run_piece,
                self._mid(route, q + 1, a - 1),
                (route.nodes[b + 1], route.nodes[-1], route.after[b + 1]),
            ]
        else:  # q >= b + 1
            pieces = [
                (route.nodes[0], route.nodes[a - 1], route.before[a - 1]),
                self._mid(route, b + 1, q),
                run_piece,
                (route.nodes[q + 1], route.nodes[-1], route.after[q + 1]),
            ]
        return self._fold(pieces)

    def tw_swap_within(self, route: RouteState, a1: int, b1: int, a2: int, b2: int) -> int:
        """Warp after exchanging segments [a1..b1] and [a2..b2], b1 < a2."""
        run1 = self.run_forward(route, a1, b1)
        run2 = self.run_forward(route, a2, b2)
        pieces = [
            (route.nodes[0], route.nodes[a1 - 1], route.before[a1 - 1]),
            (run2[0], run2[1], run2[4]),
        ]
        if b1 + 1 <= a2 - 1:
            pieces.append(self._mid(route, b1 + 1, a2 - 1))
        pieces.append((run1[0], run1[1], run1[4]))
        pieces.append((route.nodes[b2 + 1], route.nodes[-1], route.after[b2 + 1]))
        return self._fold(pieces)

    def tw_reverse_within(self, route: RouteState, p: int, q: int) -> int:
        """Warp after reversing positions p+1..q (a within-route 2-opt)."""
        run = self.run_reversed(route, p + 1, q)
        pieces = [
            (route.nodes[0], route.nodes[p], route.before[p]),
            (run[0], run[1], run[4]),
            (route.nodes[q + 1], route.nodes[-1], route.after[q + 1]),
        ]
        return self._fold(pieces)

    def tw_cross_tails(self, r1: RouteState, p: int, r2: RouteState, q: int) -> tuple[int, int]:
        """Warps after giving r1's tail (positions > p) to r2 and vice versa."""
        dur = self.dur
        tw1 = concat(
            r1.before[p], r2.after[q + 1], dur[r1.nodes[p]][r2.nodes[q + 1]]
        ).time_warp
        tw2 = concat(
            r2.before[q], r1.after[p + 1], dur[r2.nodes[q]][r1.nodes[p + 1]]
        ).time_warp
        return tw1, tw2
