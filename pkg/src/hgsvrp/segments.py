"""Constant-time concatenation algebra for route statistics.

A :class:`DurationSegment` summarises a visit sequence by four integers, so
two adjacent sequences combine in O(1) via :func:`concat`. Loads and
distances concatenate by plain addition, so they stay bare integers.

Starting service of a segment at any time in ``[earliest, latest]`` realises
its minimal time warp ``time_warp``; the segment then completes after
``duration - time_warp`` time units. Waiting is allowed (and folded into
``duration``); arriving after a latest-start bound "warps" time back and is
charged to ``time_warp``.
"""

from __future__ import annotations

from typing import NamedTuple


class DurationSegment(NamedTuple):
    duration: int
    time_warp: int
    earliest: int
    latest: int


def segment_of(data, location: int) -> tuple[DurationSegment, int, int]:
    """Base-case statistics of a single location: (segment, load, distance)."""
    if location == 0:
        depot = data.depot
        return DurationSegment(0, 0, depot.tw_early, depot.tw_late), 0, 0
    client = data.client(location)
    seg = DurationSegment(
        client.service_duration, 0, client.tw_early, client.tw_late
    )
    return seg, client.demand, 0


def concat(a: DurationSegment, b: DurationSegment, travel: int) -> DurationSegment:
    """Combine two segments separated by ``travel`` time units."""
    delta = a.duration - a.time_warp + travel
    wait = b.earliest - delta - a.latest
    if wait < 0:
        wait = 0
    warp = a.earliest + delta - b.latest
    if warp < 0:
        warp = 0
    earliest = b.earliest - delta
    if earliest < a.earliest:
        earliest = a.earliest
    latest = b.latest - delta
    if latest > a.latest:
        latest = a.latest
    return DurationSegment(
        a.duration + b.duration + travel + wait,
        a.time_warp + b.time_warp + warp,
        earliest - wait,
        latest + warp,
    )


def route_stats(route, data) -> tuple[int, int, int]:
    """Fold depot -> clients -> depot; returns (distance, load, time_warp)."""
    dur = data.dur_rows
    dist = data.dist_rows
    seg, _, _ = segment_of(data, 0)
    demands = data.demands
    services = data.services
    tw_early = data.tw_early
    tw_late = data.tw_late

    distance = 0
    load = 0
    prev = 0
    for client in route:
        seg = concat(
            seg,
            DurationSegment(services[client], 0, tw_early[client], tw_late[client]),
            dur[prev][client],
        )
        distance += dist[prev][client]
        load += demands[client]
        prev = client
    if route:
        depot_seg, _, _ = segment_of(data, 0)
        seg = concat(seg, depot_seg, dur[prev][0])
        distance += dist[prev][0]
    return distance, load, seg.time_warp
