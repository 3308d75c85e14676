"""Rounding conventions, instance parsing, solution and BKS files."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hgsvrp.fileio import (
    DIMACS,
    ROUND,
    TRUNC,
    exact_scaled,
    parse_convention,
    read_bks,
    read_instance,
    read_solution,
    round_value,
    write_solution,
)

VRPLIB_SMALL = """\
NAME : tiny
TYPE : CVRP
DIMENSION : 3
EDGE_WEIGHT_TYPE : EUC_2D
CAPACITY : 10
NODE_COORD_SECTION
1 0 0
2 3 4
3 6 8
DEMAND_SECTION
1 0
2 4
3 5
DEPOT_SECTION
1
-1
EOF
"""

SOLOMON_SMALL = """\
TOY1

VEHICLE
NUMBER     CAPACITY
  25         200

CUSTOMER
CUST NO.  XCOORD.   YCOORD.    DEMAND   READY TIME   DUE DATE   SERVICE TIME

    0      40         50          0          0       1236          0
    1      45         68         10        912        967         90
    2      45         70         30        825        870         90
"""


def test_round_value_examples():
    assert round_value(2.0, "round") == 2
    assert round_value(2.5, "round") == 3
    assert round_value(2.57, "dimacs") == 25
    assert round_value(2.99, "trunc") == 2
    assert round_value(2.57, exact_scaled(100)) == 257


@given(st.floats(min_value=0, max_value=1e6), st.floats(min_value=0, max_value=1e6))
@settings(max_examples=200)
def test_round_value_monotone(x, y):
    lo, hi = sorted((x, y))
    for conv in (ROUND, TRUNC, DIMACS, exact_scaled(3)):
        assert round_value(lo, conv) <= round_value(hi, conv)


def test_parse_convention_names():
    assert parse_convention("round") is ROUND
    assert parse_convention("dimacs") is DIMACS
    assert parse_convention("exact:10").factor == 10
    with pytest.raises(ValueError, match="unknown rounding convention"):
        parse_convention("bogus")


def test_read_vrplib_345_triangle(tmp_path):
    path = tmp_path / "tiny.vrp"
    path.write_text(VRPLIB_SMALL)
    data = read_instance(path, "round")
    assert data.num_clients == 2
    assert data.distance(0, 1) == 5
    assert data.distance(1, 2) == 5
    assert data.fleet.capacity == 10
    assert not data.has_time_component

    dimacs = read_instance(path, "dimacs")
    assert dimacs.distance(0, 1) == 50


def test_read_vrplib_symmetric_and_deterministic(tmp_path):
    path = tmp_path / "tiny.vrp"
    path.write_text(VRPLIB_SMALL)
    one = read_instance(path)
    two = read_instance(path)
    assert one == two
    mat = one.distance_matrix()
    assert (mat == mat.T).all()


def test_read_vrplib_unknown_section(tmp_path):
    path = tmp_path / "bad.vrp"
    path.write_text(VRPLIB_SMALL.replace("DEMAND_SECTION", "WEIRD_SECTION"))
    with pytest.raises(ValueError, match="unknown section keyword WEIRD_SECTION"):
        read_instance(path)


def test_read_vrplib_missing_capacity(tmp_path):
    path = tmp_path / "bad.vrp"
    path.write_text(VRPLIB_SMALL.replace("CAPACITY : 10\n", ""))
    with pytest.raises(ValueError, match="missing CAPACITY"):
        read_instance(path)


def test_read_solomon_header_and_windows(tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text(SOLOMON_SMALL)
    data = read_instance(path, "round")
    assert data.fleet.num_vehicles == 25
    assert data.fleet.capacity == 200
    assert data.num_clients == 2
    assert data.tw_early[1] == 912 and data.tw_late[1] == 967
    assert data.services[1] == 90
    assert data.depot.tw_late == 1236
    assert data.has_time_component
    # durations follow distances
    assert (data.duration_matrix() == data.distance_matrix()).all()


def test_read_solomon_dimacs_scales_time(tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text(SOLOMON_SMALL)
    data = read_instance(path, "dimacs")
    assert data.tw_early[1] == 9120
    assert data.services[1] == 900
    assert data.depot.tw_late == 12360
    # distance 0->1: hypot(5, 18) = 18.68.. -> 186 at one-decimal scale
    assert data.distance(0, 1) == 186


def test_write_solution_format(tmp_path):
    path = tmp_path / "out.sol"
    write_solution([[1, 2], [3]], 42, path)
    assert path.read_text() == "Route #1: 1 2\nRoute #2: 3\nCost 42\n"


def test_write_solution_empty(tmp_path):
    path = tmp_path / "out.sol"
    write_solution([], 0, path)
    assert path.read_text() == "Cost 0\n"


def test_solution_round_trip(tmp_path):
    rng = random.Random(7)
    routes = [[3, 1], [2, 5, 4], [6]]
    path = tmp_path / "roundtrip.sol"
    write_solution(routes, 123, path)
    parsed, cost = read_solution(path)
    assert parsed == routes
    assert cost == 123
    # skipping empty routes on write keeps the round trip stable
    write_solution([[], [9, 8], []], 5, path)
    parsed, cost = read_solution(path)
    assert parsed == [[9, 8]] and cost == 5
    del rng


def test_read_bks(tmp_path):
    path = tmp_path / "bks.csv"
    path.write_text("X-n101-k25,27591\nC1_10_1,42444.8\n")
    table = read_bks(path)
    assert table == {"X-n101-k25": 27591.0, "C1_10_1": 42444.8}


def test_read_bks_empty_and_errors(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert read_bks(empty) == {}

    dup = tmp_path / "dup.csv"
    dup.write_text("a,1\na,2\n")
    with pytest.raises(ValueError, match="duplicate instance a"):
        read_bks(dup)

    bad = tmp_path / "bad.csv"
    bad.write_text("a,notanumber\n")
    with pytest.raises(ValueError, match="unparsable cost"):
        read_bks(bad)
