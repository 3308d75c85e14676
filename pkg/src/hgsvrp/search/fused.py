"""Fast path over the default node-operator set.

``try_pair`` applies the first improving default move for a client pair in
the same operator order the generic loop uses. Distance and load deltas are
plain integer arithmetic, computed inline with shared lookups; on instances
without a time component they already are the exact penalised delta, and
otherwise the exact operator helpers run only for moves whose cheap bound
(distance + load change minus the routes' removable warp) leaves room for
an improvement. The produced trajectory matches the generic path.
"""

from __future__ import annotations

from .node_ops import (
    _apply_relocate,
    _apply_swap,
    _relocate_between,
    _relocate_within,
    _swap_between,
    _swap_within,
    _two_opt_between,
    _two_opt_within,
)

SWAP_PAIRS = ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3))


def try_pair(state, u, v, neigh_sets) -> bool:
    route_of = state.route_of
    routes = state.routes
    ru = routes[route_of[u]]
    rv = routes[route_of[v]]
    pu = state.pos_of[u]
    pv = state.pos_of[v]
    if ru is rv:
        return _try_same_route(state, ru, u, pu, v, pv, neigh_sets)
    return _try_between_routes(state, ru, u, pu, rv, v, pv, neigh_sets)


def _try_between_routes(state, ru, u, pu, rv, v, pv, neigh_sets):
    dist = state.dist
    nu = ru.nodes
    nv = rv.nodes
    cum_u = ru.cum_dist
    cum_v = rv.cum_dist
    load_u = ru.cum_load
    load_v = rv.cum_load
    len_u = ru.num_clients
    len_v = rv.num_clients
    tw_aware = state.tw_aware
    cap_pen = state.cap_pen
    capacity = state.capacity
    lu = ru.load
    lv = rv.load
    pen_now = cap_pen * (ru.excess + rv.excess)
    tw_slack = state.tw_pen * (ru.tw + rv.tw) if tw_aware else 0

    prev_u = nu[pu - 1]
    prev_v = nv[pv - 1]
    v_next = nv[pv + 1]
    row_v = dist[v]
    d_v_vnext = row_v[v_next]
    d_v_u = row_v[u]

    # relocate family: (1,0), (2,0), (3,0), then the reversed pair move
    for n_moved in (1, 2, 3):
        bu = pu + n_moved - 1
        if bu > len_u:
            break
        last = nu[bu]
        rload = load_u[bu] - load_u[pu - 1]
        eu_new = lu - rload - capacity
        if eu_new < 0:
            eu_new = 0
        ev_new = lv + rload - capacity
        if ev_new < 0:
            ev_new = 0
        base = (
            dist[prev_u][nu[bu + 1]]
            - (cum_u[bu + 1] - cum_u[pu - 1])
            + d_v_u
            + (cum_u[bu] - cum_u[pu])
            + dist[last][v_next]
            - d_v_vnext
            + cap_pen * (eu_new + ev_new)
            - pen_now
        )
        if not tw_aware:
            if base < 0:
                _apply_relocate(state, ru, pu, bu, rv, pv, False)
                return True
            continue
        if base - tw_slack >= 0:
            continue
        if _relocate_between(state, ru, pu, bu, rv, pv, False, True) < 0:
            _apply_relocate(state, ru, pu, bu, rv, pv, False)
            return True

    bu = pu + 1
    if bu <= len_u:
        x = nu[bu]
        if x != v:
            rload = load_u[bu] - load_u[pu - 1]
            eu_new = lu - rload - capacity
            if eu_new < 0:
                eu_new = 0
            ev_new = lv + rload - capacity
            if ev_new < 0:
                ev_new = 0
            base = (
                dist[prev_u][nu[bu + 1]]
                - (cum_u[bu + 1] - cum_u[pu - 1])
                + row_v[x]
                + dist[x][u]
                + dist[u][v_next]
                - d_v_vnext
                + cap_pen * (eu_new + ev_new)
                - pen_now
            )
            if not tw_aware:
                if base < 0:
                    _apply_relocate(state, ru, pu, bu, rv, pv, True)
                    return True
            elif base - tw_slack < 0:
                if _relocate_between(state, ru, pu, bu, rv, pv, True, True) < 0:
                    _apply_relocate(state, ru, pu, bu, rv, pv, True)
                    return True

    # swap family
    d_prevu_v = dist[prev_u][v]
    d_prevv_u = dist[prev_v][u]
    skip_equal = u > v and u in neigh_sets[v]
    for n_moved, n_swapped in SWAP_PAIRS:
        if skip_equal and n_moved == n_swapped:
            continue  # the mirrored pair evaluates this same move
        bu = pu + n_moved - 1
        bv = pv + n_swapped - 1
        if bu > len_u or bv > len_v:
            continue
        moved = (load_u[bu] - load_u[pu - 1]) - (load_v[bv] - load_v[pv - 1])
        eu_new = lu - moved - capacity
        if eu_new < 0:
            eu_new = 0
        ev_new = lv + moved - capacity
        if ev_new < 0:
            ev_new = 0
        base = (
            d_prevu_v
            + (cum_v[bv] - cum_v[pv])
            + dist[nv[bv]][nu[bu + 1]]
            - (cum_u[bu + 1] - cum_u[pu - 1])
            + d_prevv_u
            + (cum_u[bu] - cum_u[pu])
            + dist[nu[bu]][nv[bv + 1]]
            - (cum_v[bv + 1] - cum_v[pv - 1])
            + cap_pen * (eu_new + ev_new)
            - pen_now
        )
        if not tw_aware:
            if base < 0:
                _apply_swap(state, ru, pu, bu, rv, pv, bv)
                return True
            continue
        if base - tw_slack >= 0:
            continue
        if _swap_between(state, ru, pu, bu, rv, pv, bv, True) < 0:
            _apply_swap(state, ru, pu, bu, rv, pv, bv)
            return True

    # tail exchange (2-opt between routes)
    x = nu[pu + 1]
    y = nv[pv + 1]
    e1_new = load_u[pu] + (lv - load_v[pv]) - capacity
    if e1_new < 0:
        e1_new = 0
    e2_new = load_v[pv] + (lu - load_u[pu]) - capacity
    if e2_new < 0:
        e2_new = 0
    base = (
        dist[u][y]
        + dist[v][x]
        - dist[u][x]
        - row_v[y]
        + cap_pen * (e1_new + e2_new)
        - pen_now
    )
    if not tw_aware:
        if base < 0:
            c1 = nu[1:-1]
            c2 = nv[1:-1]
            state.set_route(ru.idx, c1[:pu] + c2[pv:])
            state.set_route(rv.idx, c2[:pv] + c1[pu:])
            return True
        return False
    if base - tw_slack < 0 and _two_opt_between(state, ru, pu, rv, pv, True) < 0:
        c1 = nu[1:-1]
        c2 = nv[1:-1]
        state.set_route(ru.idx, c1[:pu] + c2[pv:])
        state.set_route(rv.idx, c2[:pv] + c1[pu:])
        return True
    return False


def _try_same_route(state, r, u, pu, v, pv, neigh_sets):
    len_r = r.num_clients
    tw_aware = state.tw_aware
    if tw_aware:
        return _try_same_route_tw(state, r, u, pu, v, pv, neigh_sets)

    # Pure-capacity case: within-route moves keep the load, so the distance
    # change is the exact delta. Everything below is inline arithmetic.
    dist = state.dist
    nodes = r.nodes
    cum = r.cum_dist
    r_dist = r.dist

    for n_moved in (1, 2, 3):
        bu = pu + n_moved - 1
        if bu > len_r:
            break
        if pu - 1 <= pv <= bu:
            continue
        first = nodes[pu]
        last = nodes[bu]
        rdist = cum[bu] - cum[pu]
        if pv < pu:
            d_new = (
                cum[pv]
                + dist[nodes[pv]][first]
                + rdist
                + dist[last][nodes[pv + 1]]
                + (cum[pu - 1] - cum[pv + 1])
                + dist[nodes[pu - 1]][nodes[bu + 1]]
                + (r_dist - cum[bu + 1])
            )
        else:
            d_new = (
                cum[pu - 1]
                + dist[nodes[pu - 1]][nodes[bu + 1]]
                + (cum[pv] - cum[bu + 1])
                + dist[nodes[pv]][first]
                + rdist
                + dist[last][nodes[pv + 1]]
                + (r_dist - cum[pv + 1])
            )
        if d_new < r_dist:
            _apply_relocate(state, r, pu, bu, r, pv, False)
            return True

    bu = pu + 1
    if bu <= len_r:
        x = nodes[bu]
        if x != v and not pu <= pv <= bu:
            rdist = dist[x][u]
            if pv == pu - 1:
                d_new = (
                    cum[pu - 1]
                    + dist[nodes[pu - 1]][x]
                    + rdist
                    + dist[u][nodes[bu + 1]]
                    + (r_dist - cum[bu + 1])
                )
            elif pv < pu - 1:
                d_new = (
                    cum[pv]
                    + dist[nodes[pv]][x]
                    + rdist
                    + dist[u][nodes[pv + 1]]
                    + (cum[pu - 1] - cum[pv + 1])
                    + dist[nodes[pu - 1]][nodes[bu + 1]]
                    + (r_dist - cum[bu + 1])
                )
            else:
                d_new = (
                    cum[pu - 1]
                    + dist[nodes[pu - 1]][nodes[bu + 1]]
                    + (cum[pv] - cum[bu + 1])
                    + dist[nodes[pv]][x]
                    + rdist
                    + dist[u][nodes[pv + 1]]
                    + (r_dist - cum[pv + 1])
                )
            if d_new < r_dist:
                _apply_relocate(state, r, pu, bu, r, pv, True)
                return True

    skip_equal = u > v and u in neigh_sets[v]
    for n_moved, n_swapped in SWAP_PAIRS:
        if skip_equal and n_moved == n_swapped:
            continue
        bu = pu + n_moved - 1
        bv = pv + n_swapped - 1
        if bu > len_r or bv > len_r:
            continue
        if pu <= bv and pv <= bu:
            continue
        if pu < pv:
            a1, b1, a2, b2 = pu, bu, pv, bv
        else:
            a1, b1, a2, b2 = pv, bv, pu, bu
        f1 = nodes[a1]
        l1 = nodes[b1]
        f2 = nodes[a2]
        l2 = nodes[b2]
        d_new = cum[a1 - 1] + dist[nodes[a1 - 1]][f2] + (cum[b2] - cum[a2])
        if b1 + 1 <= a2 - 1:
            d_new += (
                dist[l2][nodes[b1 + 1]]
                + (cum[a2 - 1] - cum[b1 + 1])
                + dist[nodes[a2 - 1]][f1]
            )
        else:
            d_new += dist[l2][f1]
        d_new += (cum[b1] - cum[a1]) + dist[l1][nodes[b2 + 1]] + (r_dist - cum[b2 + 1])
        if d_new < r_dist:
            _apply_swap(state, r, pu, bu, r, pv, bv)
            return True

    p, q = (pu, pv) if pu < pv else (pv, pu)
    if q > p + 1:
        d_new = (
            cum[p]
            + dist[nodes[p]][nodes[q]]
            + (cum[q] - cum[p + 1])
            + dist[nodes[p + 1]][nodes[q + 1]]
            + (r_dist - cum[q + 1])
        )
        if not state.data.symmetric_distances:
            d_new = _two_opt_within_dist(state, r, p, q)
        if d_new < r_dist:
            clients = nodes[1:-1]
            clients[p:q] = clients[p:q][::-1]
            state.set_route(r.idx, clients)
            return True
    return False


def _two_opt_within_dist(state, r, p, q):
    dist = state.dist
    nodes = r.nodes
    internal = 0
    for i in range(p + 1, q):
        internal += dist[nodes[i + 1]][nodes[i]]
    return (
        r.cum_dist[p]
        + dist[nodes[p]][nodes[q]]
        + internal
        + dist[nodes[p + 1]][nodes[q + 1]]
        + (r.dist - r.cum_dist[q + 1])
    )


def _try_same_route_tw(state, r, u, pu, v, pv, neigh_sets):
    len_r = r.num_clients

    for n_moved in (1, 2, 3):
        bu = pu + n_moved - 1
        if bu > len_r:
            break
        if pu - 1 <= pv <= bu:
            continue
        delta = _relocate_within(state, r, pu, bu, pv, False, True)
        if delta < 0:
            _apply_relocate(state, r, pu, bu, r, pv, False)
            return True

    bu = pu + 1
    if bu <= len_r and r.nodes[bu] != v and not pu <= pv <= bu:
        delta = _relocate_within(state, r, pu, bu, pv, True, True)
        if delta < 0:
            _apply_relocate(state, r, pu, bu, r, pv, True)
            return True

    skip_equal = u > v and u in neigh_sets[v]
    for n_moved, n_swapped in SWAP_PAIRS:
        if skip_equal and n_moved == n_swapped:
            continue
        bu = pu + n_moved - 1
        bv = pv + n_swapped - 1
        if bu > len_r or bv > len_r:
            continue
        if pu <= bv and pv <= bu:
            continue
        if pu < pv:
            delta = _swap_within(state, r, pu, bu, pv, bv, True)
        else:
            delta = _swap_within(state, r, pv, bv, pu, bu, True)
        if delta < 0:
            _apply_swap(state, r, pu, bu, r, pv, bv)
            return True

    p, q = (pu, pv) if pu < pv else (pv, pu)
    if q > p + 1:
        delta = _two_opt_within(state, r, p, q, True)
        if delta < 0:
            clients = r.nodes[1:-1]
            clients[p:q] = clients[p:q][::-1]
            state.set_route(r.idx, clients)
            return True
    return False
