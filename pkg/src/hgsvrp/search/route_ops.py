"""Route operators: best-move evaluators over a pair of non-empty routes.

Unlike node operators these are not restricted by the granular
neighbourhood. ``best`` returns ``(delta, move)`` with the move descriptor
consumed by ``apply_move``; delta 0 with move None means nothing improving.
"""

from __future__ import annotations

from .node_ops import _apply_relocate, _relocate_between, _remove_insert_dist


class RelocateStar:
    """Best single-client relocation between two routes, either direction,
    any insertion slot (including before the first and after the last)."""

    name = "RELOCATE*"

    def __repr__(self):
        return "RelocateStar()"

    def best(self, state, r1, r2):
        dist = state.dist
        capacity = state.capacity
        cap_pen = state.cap_pen
        tw_aware = state.tw_aware
        best_delta = 0
        best_move = None
        for src, dst in ((r1, r2), (r2, r1)):
            ns = src.nodes
            nd = dst.nodes
            cum = src.cum_dist
            loads = src.cum_load
            pen_now = cap_pen * (src.excess + dst.excess)
            tw_slack = state.tw_pen * (src.tw + dst.tw) if tw_aware else 0
            for a in range(1, src.num_clients + 1):
                u = ns[a]
                removal = dist[ns[a - 1]][ns[a + 1]] - (cum[a + 1] - cum[a - 1])
                rload = loads[a] - loads[a - 1]
                es_new = src.load - rload - capacity
                if es_new < 0:
                    es_new = 0
                ed_new = dst.load + rload - capacity
                if ed_new < 0:
                    ed_new = 0
                load_term = cap_pen * (es_new + ed_new) - pen_now
                row_u = dist[u]
                for q in range(dst.num_clients + 1):
                    nq = nd[q]
                    base = (
                        removal
                        + dist[nq][u]
                        + row_u[nd[q + 1]]
                        - dist[nq][nd[q + 1]]
                        + load_term
                    )
                    if not tw_aware:
                        if base < best_delta:
                            best_delta = base
                            best_move = (src.idx, a, dst.idx, q)
                        continue
                    if base - tw_slack >= best_delta:
                        continue
                    delta = _relocate_between(state, src, a, a, dst, q, False, True)
                    if delta < best_delta:
                        best_delta = delta
                        best_move = (src.idx, a, dst.idx, q)
        return best_delta, best_move

    def apply_move(self, state, move):
        src_idx, a, dst_idx, q = move
        _apply_relocate(state, state.routes[src_idx], a, a, state.routes[dst_idx], q, False)


class SwapStar:
    """Best swap of one client per route, each reinserted at its best slot
    in the other route.

    Insertion slots tried per client: its two cheapest slots by distance
    (precomputed with the counterpart still in place, skipping slots the
    removal invalidates) plus the slot the removed counterpart vacates. The
    reported delta is exact for the returned placements.
    """

    name = "SWAP*"

    def __repr__(self):
        return "SwapStar()"

    def best(self, state, r1, r2):
        dist = state.dist
        capacity = state.capacity
        cap_pen = state.cap_pen
        tw_aware = state.tw_aware
        demands = state.data.demands
        top_into_2 = [None] + [
            self._top_slots(state, r2, r1.nodes[a]) for a in range(1, r1.num_clients + 1)
        ]
        top_into_1 = [None] + [
            self._top_slots(state, r1, r2.nodes[b]) for b in range(1, r2.num_clients + 1)
        ]

        pen_now = cap_pen * (r1.excess + r2.excess)
        tw_slack = state.tw_pen * (r1.tw + r2.tw) if tw_aware else 0
        l1 = r1.load
        l2 = r2.load
        n1 = r1.nodes
        n2 = r2.nodes
        best_delta = 0
        best_move = None
        for a in range(1, r1.num_clients + 1):
            u = n1[a]
            qu = demands[u]
            gain_u = (
                dist[n1[a - 1]][u] + dist[u][n1[a + 1]] - dist[n1[a - 1]][n1[a + 1]]
            )
            for b in range(1, r2.num_clients + 1):
                v = n2[b]
                shift = demands[v] - qu
                e1_new = l1 + shift - capacity
                if e1_new < 0:
                    e1_new = 0
                e2_new = l2 - shift - capacity
                if e2_new < 0:
                    e2_new = 0
                load_term = cap_pen * (e1_new + e2_new) - pen_now

                # optimistic distance bound to skip hopeless pairs
                gain_v = (
                    dist[n2[b - 1]][v]
                    + dist[v][n2[b + 1]]
                    - dist[n2[b - 1]][n2[b + 1]]
                )
                in_u = dist[n2[b - 1]][u] + dist[u][n2[b + 1]] - dist[n2[b - 1]][n2[b + 1]]
                in_v = dist[n1[a - 1]][v] + dist[v][n1[a + 1]] - dist[n1[a - 1]][n1[a + 1]]
                bound_u = min(in_u, top_into_2[a][0][0]) if top_into_2[a] else in_u
                bound_v = min(in_v, top_into_1[b][0][0]) if top_into_1[b] else in_v
                if (
                    bound_u - gain_u + bound_v - gain_v + load_term - tw_slack
                    >= best_delta
                ):
                    continue

                c1_new, q1 = self._best_placement(state, r1, a, v, top_into_1[b])
                c2_new, q2 = self._best_placement(state, r2, b, u, top_into_2[a])
                delta = c1_new + c2_new - r1.cost - r2.cost
                if delta < best_delta:
                    best_delta = delta
                    best_move = (r1.idx, a, q1, r2.idx, b, q2)
        return best_delta, best_move

    @staticmethod
    def _top_slots(state, route, client):
        """Two cheapest insertion slots of ``client`` into ``route`` by
        distance delta, as (cost, slot) with ties to the earlier slot."""
        dist = state.dist
        nodes = route.nodes
        row_c = dist[client]
        first = second = None
        for q in range(route.num_clients + 1):
            nq = nodes[q]
            nn = nodes[q + 1]
            cost = dist[nq][client] + row_c[nn] - dist[nq][nn]
            if first is None or cost < first[0]:
                second = first
                first = (cost, q)
            elif second is None or cost < second[0]:
                second = (cost, q)
        if first is None:
            return []
        return [first] if second is None else [first, second]

    @staticmethod
    def _best_placement(state, route, rm, client, tops):
        """Exact cost of ``route`` with position ``rm`` removed and ``client``
        inserted at its best candidate slot; returns (cost, slot)."""
        demand = state.data.demands[client]
        load_new = route.load - route.cum_load[rm] + route.cum_load[rm - 1] + demand
        excess = load_new - state.capacity
        if excess < 0:
            excess = 0
        pen = state.cap_pen * excess
        tw_aware = state.tw_aware
        run = (client, client, 0, demand, state.at[client]) if tw_aware else None

        best_cost = None
        best_q = None
        candidates = [rm - 1]
        if tops:
            candidates += [q for _, q in tops if q != rm - 1 and q != rm]
        for q in candidates:
            d_new = _remove_insert_dist(state, route, rm, rm, q, client, client, 0)
            cost = d_new + pen
            if tw_aware:
                cost += state.tw_pen * state.tw_move_within(route, rm, rm, q, run)
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best_q = q
        return best_cost, best_q

    def apply_move(self, state, move):
        idx1, a, q1, idx2, b, q2 = move
        r1 = state.routes[idx1]
        r2 = state.routes[idx2]
        u = r1.nodes[a]
        v = r2.nodes[b]
        c1 = r1.nodes[1:-1]
        c2 = r2.nodes[1:-1]
        del c1[a - 1]
        i1 = q1 if q1 < a else q1 - 1
        c1[i1:i1] = [v]
        del c2[b - 1]
        i2 = q2 if q2 < b else q2 - 1
        c2[i2:i2] = [u]
        state.set_route(idx1, c1)
        state.set_route(idx2, c2)
