"""Instance construction and the Model facade."""

import numpy as np
import pytest

from hgsvrp.model import Client, Depot, Fleet, Model, build_problem

from helpers import make_instance, route_distance


def _simple_clients(n):
    return [Client(index=i, x=i, y=0, demand=1) for i in range(1, n + 1)]


def test_minimal_instance():
    d = [[0, 1], [1, 0]]
    data = build_problem(
        Depot(0, 0), _simple_clients(1), Fleet(1, 10), d, d
    )
    assert data.num_clients == 1
    assert data.distance(0, 1) == 1
    assert data.duration(1, 0) == 1


def test_inverted_time_window_rejected():
    clients = [Client(index=1, x=1, y=0, demand=1, tw_early=5, tw_late=3)]
    d = [[0, 1], [1, 0]]
    with pytest.raises(ValueError, match="time window inverted at client 1"):
        build_problem(Depot(0, 0), clients, Fleet(1, 10), d, d)


def test_manhattan_route_distance_matches_hand_sum():
    # Four clients on integer coordinates, edges set to Manhattan distances.
    pts = [(0, 0), (1, 2), (4, 2), (4, 7), (0, 5)]
    dim = len(pts)
    dist = np.zeros((dim, dim), dtype=np.int64)
    for i in range(dim):
        for j in range(dim):
            dist[i][j] = abs(pts[i][0] - pts[j][0]) + abs(pts[i][1] - pts[j][1])
    clients = [
        Client(index=i, x=pts[i][0], y=pts[i][1], demand=1) for i in range(1, dim)
    ]
    data = build_problem(Depot(0, 0), clients, Fleet(2, 10), dist, dist)

    # |dx| + |dy| terms summed by hand along 0 -> 1 -> 2 -> 3 -> 4 -> 0.
    hand = (1 + 2) + 3 + 5 + (4 + 2) + 5
    assert route_distance(data, [1, 2, 3, 4]) == hand


def test_matrix_validation_errors():
    clients = _simple_clients(1)
    with pytest.raises(ValueError, match="dimension"):
        build_problem(Depot(0, 0), clients, Fleet(1, 10), [[0]], [[0]])
    bad = [[0, -1], [1, 0]]
    good = [[0, 1], [1, 0]]
    with pytest.raises(ValueError, match="negative distance entry at \\(0, 1\\)"):
        build_problem(Depot(0, 0), clients, Fleet(1, 10), bad, good)
    diag = [[0, 1], [1, 5]]
    with pytest.raises(ValueError, match="diagonal"):
        build_problem(Depot(0, 0), clients, Fleet(1, 10), good, diag)


def test_accessors_are_pure():
    data = make_instance([(0, 0), (3, 4), (6, 8)], demands=[0, 2, 3])
    first = [data.distance(i, j) for i in range(3) for j in range(3)]
    second = [data.distance(i, j) for i in range(3) for j in range(3)]
    assert first == second
    assert data.distance_matrix().flags.writeable is False


def test_facade_equals_direct_construction():
    m = Model()
    depot = m.add_depot(x=0, y=0)
    c1 = m.add_client(x=1, y=0, demand=2)
    c2 = m.add_client(x=2, y=0, demand=3)
    m.add_vehicle_type(num_available=2, capacity=10)
    locs = [depot, c1, c2]
    weights = [[0, 4, 9], [4, 0, 7], [9, 7, 0]]
    for i in range(3):
        for j in range(3):
            if i != j:
                m.add_edge(locs[i], locs[j], distance=weights[i][j])
    via_facade = m.data()

    direct = build_problem(
        Depot(0, 0),
        [
            Client(index=1, x=1, y=0, demand=2),
            Client(index=2, x=2, y=0, demand=3),
        ],
        Fleet(2, 10),
        weights,
        weights,
    )
    assert via_facade == direct


def test_facade_without_fleet():
    m = Model()
    m.add_depot(x=0, y=0)
    m.add_client(x=1, y=1)
    with pytest.raises(ValueError, match="fleet undefined"):
        m.data()


def test_facade_missing_edge_defaults():
    m = Model()
    depot = m.add_depot(x=0, y=0)
    c1 = m.add_client(x=1, y=0)
    m.add_vehicle_type(1, 10)
    m.add_edge(depot, c1, distance=3)
    data = m.data()
    assert data.distance(0, 1) == 3
    assert data.distance(1, 0) == 10**7  # not given -> default fill


def test_facade_rejects_unknown_endpoint_and_duplicates():
    m = Model()
    depot = m.add_depot(x=0, y=0)
    c1 = m.add_client(x=1, y=0)
    m.add_vehicle_type(1, 10)
    stranger = Client(index=9, x=5, y=5)
    with pytest.raises(ValueError, match="endpoint"):
        m.add_edge(depot, stranger, distance=1)
    m.add_edge(depot, c1, distance=1)
    with pytest.raises(ValueError, match="duplicate edge"):
        m.add_edge(depot, c1, distance=2)


def test_replace_fleet_keeps_everything_else():
    data = make_instance([(0, 0), (3, 4)], demands=[0, 5], capacity=10, num_vehicles=3)
    smaller = data.replace_fleet(Fleet(2, 10))
    assert smaller.fleet.num_vehicles == 2
    assert smaller.distance(0, 1) == data.distance(0, 1)
    assert smaller.clients == data.clients
