"""Node operators: move evaluators over a client pair (u, v).

Each operator exposes ``evaluate(state, u, v, prune=True)`` returning the
exact penalised-cost delta, or None when the move is not applicable. With
``prune=True`` the evaluation may return early with a non-negative value
when the move provably cannot improve (both touched routes feasible and the
distance change alone is non-negative); negative return values are always
exact, and ``prune=False`` forces the exact delta for any move. ``apply``
performs the evaluated geometry.

Relocation-style operators also support placing their segment into an empty
route via ``evaluate_into_empty`` / ``apply_into_empty``.
"""

from __future__ import annotations


class Exchange:
    """(N, M)-exchange: swap the segment of N nodes starting at u with the
    segment of M nodes starting at v; M = 0 relocates the N-segment after v."""

    def __init__(self, num_moved: int, num_swapped: int):
        if num_moved < 1 or not 0 <= num_swapped <= num_moved:
            raise ValueError("exchange requires N >= 1 and 0 <= M <= N")
        self.n = num_moved
        self.m = num_swapped
        self.name = f"({num_moved},{num_swapped})-exchange"
        self.supports_empty = num_swapped == 0

    def __repr__(self):
        return f"Exchange({self.n}, {self.m})"

    def evaluate(self, state, u, v, prune=True):
        ru = state.routes[state.route_of[u]]
        rv = state.routes[state.route_of[v]]
        pu = state.pos_of[u]
        pv = state.pos_of[v]
        bu = pu + self.n - 1
        if bu > ru.num_clients:
            return None

        if self.m == 0:
            if ru is rv:
                if pv == pu - 1:
                    return 0  # reinserting after the predecessor changes nothing
                if pu <= pv <= bu:
                    return None  # insertion slot inside the moved segment
                return _relocate_within(state, ru, pu, bu, pv, False, prune)
            return _relocate_between(state, ru, pu, bu, rv, pv, False, prune)

        bv = pv + self.m - 1
        if bv > rv.num_clients:
            return None
        if ru is rv:
            if pu <= bv and pv <= bu:
                return None  # overlapping segments
            if pu < pv:
                return _swap_within(state, ru, pu, bu, pv, bv, prune)
            return _swap_within(state, ru, pv, bv, pu, bu, prune)
        return _swap_between(state, ru, pu, bu, rv, pv, bv, prune)

    def apply(self, state, u, v):
        ru = state.routes[state.route_of[u]]
        rv = state.routes[state.route_of[v]]
        pu = state.pos_of[u]
        pv = state.pos_of[v]
        bu = pu + self.n - 1
        if self.m == 0:
            _apply_relocate(state, ru, pu, bu, rv, pv, False)
        else:
            _apply_swap(state, ru, pu, bu, rv, pv, pv + self.m - 1)

    def evaluate_into_empty(self, state, u, empty_route, prune=True):
        ru = state.routes[state.route_of[u]]
        pu = state.pos_of[u]
        bu = pu + self.n - 1
        if bu > ru.num_clients or ru.num_clients == self.n:
            return None  # moving the whole route is pointless
        return _relocate_between(state, ru, pu, bu, empty_route, 0, False, prune)

    def apply_into_empty(self, state, u, empty_route):
        ru = state.routes[state.route_of[u]]
        pu = state.pos_of[u]
        _apply_relocate(state, ru, pu, pu + self.n - 1, empty_route, 0, False)


class MoveTwoClientsReversed:
    """Relocate u and its successor after v, in reversed order."""

    n = 2
    m = 0
    name = "MoveTwoClientsReversed"
    supports_empty = True

    def __repr__(self):
        return "MoveTwoClientsReversed()"

    def evaluate(self, state, u, v, prune=True):
        ru = state.routes[state.route_of[u]]
        pu = state.pos_of[u]
        if pu + 1 > ru.num_clients:
            return None  # u has no client successor
        if v == ru.nodes[pu + 1]:
            return None
        rv = state.routes[state.route_of[v]]
        pv = state.pos_of[v]
        if ru is rv:
            return _relocate_within(state, ru, pu, pu + 1, pv, True, prune)
        return _relocate_between(state, ru, pu, pu + 1, rv, pv, True, prune)

    def apply(self, state, u, v):
        ru = state.routes[state.route_of[u]]
        rv = state.routes[state.route_of[v]]
        pu = state.pos_of[u]
        _apply_relocate(state, ru, pu, pu + 1, rv, state.pos_of[v], True)

    def evaluate_into_empty(self, state, u, empty_route, prune=True):
        ru = state.routes[state.route_of[u]]
        pu = state.pos_of[u]
        if pu + 1 > ru.num_clients or ru.num_clients == 2:
            return None
        return _relocate_between(state, ru, pu, pu + 1, empty_route, 0, True, prune)

    def apply_into_empty(self, state, u, empty_route):
        ru = state.routes[state.route_of[u]]
        pu = state.pos_of[u]
        _apply_relocate(state, ru, pu, pu + 1, empty_route, 0, True)


class TwoOpt:
    """Within a route: reverse the segment between u and v. Between routes:
    exchange the tails following u and v."""

    name = "2-OPT"
    supports_empty = False

    def __repr__(self):
        return "TwoOpt()"

    def evaluate(self, state, u, v, prune=True):
        ru = state.routes[state.route_of[u]]
        rv = state.routes[state.route_of[v]]
        if ru is rv:
            p = state.pos_of[u]
            q = state.pos_of[v]
            if p > q:
                p, q = q, p
            if q <= p + 1:
                return None  # nothing to reverse
            return _two_opt_within(state, ru, p, q, prune)
        return _two_opt_between(state, ru, state.pos_of[u], rv, state.pos_of[v], prune)

    def apply(self, state, u, v):
        ru = state.routes[state.route_of[u]]
        rv = state.routes[state.route_of[v]]
        pu = state.pos_of[u]
        pv = state.pos_of[v]
        if ru is rv:
            p, q = (pu, pv) if pu < pv else (pv, pu)
            clients = ru.nodes[1:-1]
            clients[p:q] = clients[p:q][::-1]
            state.set_route(ru.idx, clients)
        else:
            c1 = ru.nodes[1:-1]
            c2 = rv.nodes[1:-1]
            state.set_route(ru.idx, c1[:pu] + c2[pv:])
            state.set_route(rv.idx, c2[:pv] + c1[pu:])


# ---------------------------------------------------------------------------
# shared evaluation machinery


def _run_ends(state, r, a, b, reverse):
    """(first, last, internal distance) of positions a..b, possibly reversed."""
    nodes = r.nodes
    if not reverse:
        return nodes[a], nodes[b], r.cum_dist[b] - r.cum_dist[a]
    dist = state.dist
    internal = 0
    for p in range(a, b):
        internal += dist[nodes[p + 1]][nodes[p]]
    return nodes[b], nodes[a], internal


def _make_run(state, r, a, b, reverse):
    return state.run_reversed(r, a, b) if reverse else state.run_forward(r, a, b)


def _relocate_between(state, ru, a, b, rv, q, reverse, prune):
    dist = state.dist
    nu = ru.nodes
    nv = rv.nodes
    if reverse:
        first, last, rdist = _run_ends(state, ru, a, b, True)
    else:
        first = nu[a]
        last = nu[b]
        rdist = ru.cum_dist[b] - ru.cum_dist[a]
    vq = nv[q]
    vq_next = nv[q + 1]

    du_new = ru.dist - (ru.cum_dist[b + 1] - ru.cum_dist[a - 1]) + dist[nu[a - 1]][nu[b + 1]]
    dv_new = rv.dist - dist[vq][vq_next] + dist[vq][first] + rdist + dist[last][vq_next]

    rload = ru.cum_load[b] - ru.cum_load[a - 1]
    capacity = state.capacity
    eu_new = ru.load - rload - capacity
    if eu_new < 0:
        eu_new = 0
    ev_new = rv.load + rload - capacity
    if ev_new < 0:
        ev_new = 0
    base = (
        du_new
        + dv_new
        - ru.dist
        - rv.dist
        + state.cap_pen * (eu_new - ru.excess + ev_new - rv.excess)
    )
    if not state.tw_aware:
        return base
    tw_pen = state.tw_pen
    if prune and base - tw_pen * (ru.tw + rv.tw) >= 0:
        return base - tw_pen * (ru.tw + rv.tw)
    tu_new = state.tw_remove(ru, a, b)
    tv_new = state.tw_insert(rv, q, _make_run(state, ru, a, b, reverse))
    return base + tw_pen * (tu_new - ru.tw + tv_new - rv.tw)


def _remove_insert_dist(state, r, a, b, q, first, last, rdist):
    """Distance of route r after removing positions a..b and inserting the
    run (first..last, internal distance rdist) after position q."""
    dist = state.dist
    nodes = r.nodes
    if q == a - 1:
        return (
            r.cum_dist[a - 1]
            + dist[nodes[a - 1]][first]
            + rdist
            + dist[last][nodes[b + 1]]
            + (r.dist - r.cum_dist[b + 1])
        )
    if q < a - 1:
        return (
            r.cum_dist[q]
            + dist[nodes[q]][first]
            + rdist
            + dist[last][nodes[q + 1]]
            + (r.cum_dist[a - 1] - r.cum_dist[q + 1])
            + dist[nodes[a - 1]][nodes[b + 1]]
            + (r.dist - r.cum_dist[b + 1])
        )
    return (  # q >= b + 1
        r.cum_dist[a - 1]
        + dist[nodes[a - 1]][nodes[b + 1]]
        + (r.cum_dist[q] - r.cum_dist[b + 1])
        + dist[nodes[q]][first]
        + rdist
        + dist[last][nodes[q + 1]]
        + (r.dist - r.cum_dist[q + 1])
    )


def _relocate_within(state, r, a, b, q, reverse, prune):
    first, last, rdist = _run_ends(state, r, a, b, reverse)
    d_new = _remove_insert_dist(state, r, a, b, q, first, last, rdist)
    dist_delta = d_new - r.dist
    if not state.tw_aware:
        return dist_delta  # load is unchanged within a route
    tw_pen = state.tw_pen
    if prune and dist_delta - tw_pen * r.tw >= 0:
        return dist_delta - tw_pen * r.tw
    tw_new = state.tw_move_within(r, a, b, q, _make_run(state, r, a, b, reverse))
    return dist_delta + tw_pen * (tw_new - r.tw)


def _swap_between(state, ru, a1, b1, rv, a2, b2, prune):
    dist = state.dist
    nu = ru.nodes
    nv = rv.nodes
    a_first = nu[a1]
    a_last = nu[b1]
    a_dist = ru.cum_dist[b1] - ru.cum_dist[a1]
    b_first = nv[a2]
    b_last = nv[b2]
    b_dist = rv.cum_dist[b2] - rv.cum_dist[a2]

    du_new = (
        ru.cum_dist[a1 - 1]
        + dist[nu[a1 - 1]][b_first]
        + b_dist
        + dist[b_last][nu[b1 + 1]]
        + (ru.dist - ru.cum_dist[b1 + 1])
    )
    dv_new = (
        rv.cum_dist[a2 - 1]
        + dist[nv[a2 - 1]][a_first]
        + a_dist
        + dist[a_last][nv[b2 + 1]]
        + (rv.dist - rv.cum_dist[b2 + 1])
    )
    a_load = ru.cum_load[b1] - ru.cum_load[a1 - 1]
    b_load = rv.cum_load[b2] - rv.cum_load[a2 - 1]
    capacity = state.capacity
    eu_new = ru.load - a_load + b_load - capacity
    if eu_new < 0:
        eu_new = 0
    ev_new = rv.load - b_load + a_load - capacity
    if ev_new < 0:
        ev_new = 0
    base = (
        du_new
        + dv_new
        - ru.dist
        - rv.dist
        + state.cap_pen * (eu_new - ru.excess + ev_new - rv.excess)
    )
    if not state.tw_aware:
        return base
    tw_pen = state.tw_pen
    if prune and base - tw_pen * (ru.tw + rv.tw) >= 0:
        return base - tw_pen * (ru.tw + rv.tw)
    tu_new = state.tw_replace(ru, a1, b1, state.run_forward(rv, a2, b2))
    tv_new = state.tw_replace(rv, a2, b2, state.run_forward(ru, a1, b1))
    return base + tw_pen * (tu_new - ru.tw + tv_new - rv.tw)


def _swap_within(state, r, a1, b1, a2, b2, prune):
    dist = state.dist
    nodes = r.nodes
    cum = r.cum_dist
    f1 = nodes[a1]
    l1 = nodes[b1]
    d1 = cum[b1] - cum[a1]
    f2 = nodes[a2]
    l2 = nodes[b2]
    d2 = cum[b2] - cum[a2]

    d_new = r.cum_dist[a1 - 1] + dist[nodes[a1 - 1]][f2] + d2
    if b1 + 1 <= a2 - 1:
        d_new += (
            dist[l2][nodes[b1 + 1]]
            + (r.cum_dist[a2 - 1] - r.cum_dist[b1 + 1])
            + dist[nodes[a2 - 1]][f1]
        )
    else:
        d_new += dist[l2][f1]
    d_new += d1 + dist[l1][nodes[b2 + 1]] + (r.dist - r.cum_dist[b2 + 1])

    dist_delta = d_new - r.dist
    if not state.tw_aware:
        return dist_delta
    tw_pen = state.tw_pen
    if prune and dist_delta - tw_pen * r.tw >= 0:
        return dist_delta - tw_pen * r.tw
    tw_new = state.tw_swap_within(r, a1, b1, a2, b2)
    return dist_delta + tw_pen * (tw_new - r.tw)


def _two_opt_within(state, r, p, q, prune):
    dist = state.dist
    nodes = r.nodes
    if state.data.symmetric_distances:
        internal = r.cum_dist[q] - r.cum_dist[p + 1]
    else:
        internal = 0
        for i in range(p + 1, q):
            internal += dist[nodes[i + 1]][nodes[i]]
    d_new = (
        r.cum_dist[p]
        + dist[nodes[p]][nodes[q]]
        + internal
        + dist[nodes[p + 1]][nodes[q + 1]]
        + (r.dist - r.cum_dist[q + 1])
    )
    dist_delta = d_new - r.dist
    if not state.tw_aware:
        return dist_delta
    tw_pen = state.tw_pen
    if prune and dist_delta - tw_pen * r.tw >= 0:
        return dist_delta - tw_pen * r.tw
    tw_new = state.tw_reverse_within(r, p, q)
    return dist_delta + tw_pen * (tw_new - r.tw)


def _two_opt_between(state, r1, p, r2, q, prune):
    dist = state.dist
    n1 = r1.nodes
    n2 = r2.nodes
    d1_new = r1.cum_dist[p] + dist[n1[p]][n2[q + 1]] + (r2.dist - r2.cum_dist[q + 1])
    d2_new = r2.cum_dist[q] + dist[n2[q]][n1[p + 1]] + (r1.dist - r1.cum_dist[p + 1])
    l1_new = r1.cum_load[p] + (r2.load - r2.cum_load[q])
    l2_new = r2.cum_load[q] + (r1.load - r1.cum_load[p])
    capacity = state.capacity
    e1_new = l1_new - capacity
    if e1_new < 0:
        e1_new = 0
    e2_new = l2_new - capacity
    if e2_new < 0:
        e2_new = 0
    base = (
        d1_new
        + d2_new
        - r1.dist
        - r2.dist
        + state.cap_pen * (e1_new - r1.excess + e2_new - r2.excess)
    )
    if not state.tw_aware:
        return base
    tw_pen = state.tw_pen
    if prune and base - tw_pen * (r1.tw + r2.tw) >= 0:
        return base - tw_pen * (r1.tw + r2.tw)
    t1_new, t2_new = state.tw_cross_tails(r1, p, r2, q)
    return base + tw_pen * (t1_new - r1.tw + t2_new - r2.tw)


# ---------------------------------------------------------------------------
# move application


def _apply_relocate(state, ru, a, b, rv, q, reverse):
    seg = ru.nodes[a : b + 1]
    if reverse:
        seg.reverse()
    if ru is rv:
        clients = ru.nodes[1:-1]
        del clients[a - 1 : b]
        idx = q if q < a else q - (b - a + 1)
        clients[idx:idx] = seg
        state.set_route(ru.idx, clients)
    else:
        cu = ru.nodes[1:-1]
        del cu[a - 1 : b]
        cv = rv.nodes[1:-1]
        cv[q:q] = seg
        state.set_route(ru.idx, cu)
        state.set_route(rv.idx, cv)


def _apply_swap(state, ru, a1, b1, rv, a2, b2):
    if ru is rv:
        if a1 > a2:
            a1, b1, a2, b2 = a2, b2, a1, b1
        c = ru.nodes[1:-1]
        new = c[: a1 - 1] + c[a2 - 1 : b2] + c[b1 : a2 - 1] + c[a1 - 1 : b1] + c[b2:]
        state.set_route(ru.idx, new)
    else:
        cu = ru.nodes[1:-1]
        cv = rv.nodes[1:-1]
        seg_u = cu[a1 - 1 : b1]
        cu[a1 - 1 : b1] = cv[a2 - 1 : b2]
        cv[a2 - 1 : b2] = seg_u
        state.set_route(ru.idx, cu)
        state.set_route(rv.idx, cv)
