"""Benchmark file I/O: instances, solutions, best-known-solution tables.

Instance data is converted to integers on read; the rounding convention
decides how. The ``dimacs`` convention keeps one-decimal precision by
scaling everything (including temporal quantities) by ten.
"""

from __future__ import annotations

import csv
import math
import re
from pathlib import Path

import numpy as np

from .model import TW_OPEN, Client, Depot, Fleet, ProblemData


class RoundingConvention:
    """Deterministic real -> integer mapping plus the temporal scale factor."""

    def __init__(self, name: str, factor: float, mode: str):
        self.name = name
        self.factor = factor  # applied to temporal quantities as well
        self.mode = mode  # "half-away" or "floor"

    def apply(self, x: float) -> int:
        scaled = self.factor * x
        if self.mode == "floor":
            return math.floor(scaled)
        # Round half away from zero; x >= 0 throughout this package.
        return math.floor(scaled + 0.5)

    def apply_array(self, arr: np.ndarray) -> np.ndarray:
        scaled = self.factor * arr
        if self.mode == "floor":
            return np.floor(scaled).astype(np.int64)
        return np.floor(scaled + 0.5).astype(np.int64)

    def scale_int(self, value: int) -> int:
        return self.apply(value)

    def __repr__(self):
        return f"RoundingConvention({self.name!r})"


ROUND = RoundingConvention("round", 1, "half-away")
TRUNC = RoundingConvention("trunc", 1, "floor")
DIMACS = RoundingConvention("dimacs", 10, "floor")


def exact_scaled(factor: float) -> RoundingConvention:
    return RoundingConvention(f"exact:{factor:g}", factor, "half-away")


def parse_convention(spec) -> RoundingConvention:
    """Accept a convention object or a name like ``round`` or ``exact:10``."""
    if isinstance(spec, RoundingConvention):
        return spec
    name = str(spec).strip().lower()
    if name == "round":
        return ROUND
    if name == "trunc":
        return TRUNC
    if name == "dimacs":
        return DIMACS
    if name.startswith("exact:"):
        return exact_scaled(float(name.split(":", 1)[1]))
    raise ValueError(f"unknown rounding convention {spec!r}")


def round_value(x: float, convention="round") -> int:
    return parse_convention(convention).apply(x)


# ---------------------------------------------------------------------------
# Instance reading

_VRPLIB_SECTIONS = {
    "NODE_COORD_SECTION",
    "DEMAND_SECTION",
    "DEPOT_SECTION",
    "EDGE_WEIGHT_SECTION",
    "SERVICE_TIME_SECTION",
    "TIME_WINDOW_SECTION",
}


def read_instance(path, convention="round") -> ProblemData:
    """Read a VRPLIB (CVRP) or Solomon/Homberger (VRPTW) instance file."""
    convention = parse_convention(convention)
    path = Path(path)
    text = path.read_text()
    if _looks_like_solomon(text):
        return _read_solomon(text, convention)
    return _read_vrplib(text, convention)


def _looks_like_solomon(text: str) -> bool:
    head = text[:2000].upper()
    return "VEHICLE" in head and "CUSTOMER" in head and ":" not in head.split("\n")[0]


def _euclidean_matrix(coords: np.ndarray, convention) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    dist = np.sqrt((diff.astype(np.float64) ** 2).sum(axis=-1))
    out = convention.apply_array(dist)
    np.fill_diagonal(out, 0)
    return out


def _read_solomon(text: str, convention) -> ProblemData:
    lines = [ln.strip() for ln in text.splitlines()]
    rows = []
    fleet_nums = None
    section = None
    for ln in lines:
        if not ln:
            continue
        up = ln.upper()
        if up.startswith("VEHICLE"):
            section = "vehicle"
            continue
        if up.startswith("CUSTOMER"):
            section = "customer"
            continue
        if up.startswith("NUMBER") or up.startswith("CUST"):
            continue
        parts = ln.split()
        if section == "vehicle" and len(parts) == 2:
            fleet_nums = (int(parts[0]), int(parts[1]))
        elif section == "customer" and len(parts) == 7:
            rows.append([int(float(p)) for p in parts])
    if fleet_nums is None:
        raise ValueError("missing VEHICLE NUMBER/CAPACITY header")
    if not rows:
        raise ValueError("no customer rows found")

    tf = convention.factor
    scale_t = lambda v: convention.apply(v) if tf != 1 else v  # noqa: E731

    depot_row = rows[0]
    depot = Depot(
        x=depot_row[1],
        y=depot_row[2],
        tw_early=scale_t(depot_row[4]),
        tw_late=scale_t(depot_row[5]),
    )
    clients = [
        Client(
            index=i,
            x=r[1],
            y=r[2],
            demand=r[3],
            service_duration=scale_t(r[6]),
            tw_early=scale_t(r[4]),
            tw_late=scale_t(r[5]),
        )
        for i, r in enumerate(rows[1:], start=1)
    ]
    coords = np.array([[r[1], r[2]] for r in rows], dtype=np.int64)
    dist = _euclidean_matrix(coords, convention)
    fleet = Fleet(num_vehicles=fleet_nums[0], capacity=fleet_nums[1])
    return ProblemData(depot, clients, fleet, dist, dist.copy())


def _read_vrplib(text: str, convention) -> ProblemData:
    headers: dict[str, str] = {}
    sections: dict[str, list[list[float]]] = {}
    current = None
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln == "EOF":
            continue
        if ":" in ln and not ln.split(":", 1)[0].strip().isdigit() and current is None:
            key, value = ln.split(":", 1)
            headers[key.strip().upper()] = value.strip()
            continue
        word = ln.split(":", 1)[0].strip().upper()
        if word.endswith("_SECTION"):
            if word not in _VRPLIB_SECTIONS:
                raise ValueError(f"unknown section keyword {word}")
            current = word
            sections[current] = []
            continue
        if current is None:
            raise ValueError(f"unexpected line outside any section: {ln!r}")
        sections[current].append([float(tok) for tok in ln.replace(",", " ").split()])

    if "CAPACITY" not in headers:
        raise ValueError("missing CAPACITY")
    dim = int(headers.get("DIMENSION", 0))
    if dim <= 1:
        raise ValueError("missing or invalid DIMENSION")
    capacity = int(headers["CAPACITY"])

    edge_type = headers.get("EDGE_WEIGHT_TYPE", "EUC_2D").upper()
    if edge_type == "EUC_2D":
        coord_rows = sections.get("NODE_COORD_SECTION")
        if not coord_rows:
            raise ValueError("missing NODE_COORD_SECTION")
        if any(len(r) != 3 for r in coord_rows) or len(coord_rows) != dim:
            raise ValueError("non-rectangular NODE_COORD_SECTION")
        order = [int(r[0]) for r in coord_rows]
        coords = np.array([[r[1], r[2]] for r in coord_rows])
        dist = _euclidean_matrix(coords, convention)
    elif edge_type == "EXPLICIT":
        fmt = headers.get("EDGE_WEIGHT_FORMAT", "FULL_MATRIX").upper()
        if fmt != "FULL_MATRIX":
            raise ValueError(f"unsupported EDGE_WEIGHT_FORMAT {fmt}")
        flat = [v for row in sections.get("EDGE_WEIGHT_SECTION", []) for v in row]
        if len(flat) != dim * dim:
            raise ValueError("non-rectangular EDGE_WEIGHT_SECTION")
        dist = convention.apply_array(np.array(flat).reshape(dim, dim))
        np.fill_diagonal(dist, 0)
        coord_rows = sections.get("NODE_COORD_SECTION")
        order = (
            [int(r[0]) for r in coord_rows]
            if coord_rows
            else list(range(1, dim + 1))
        )
        coords = (
            np.array([[r[1], r[2]] for r in coord_rows])
            if coord_rows
            else np.zeros((dim, 2))
        )
    else:
        raise ValueError(f"unsupported EDGE_WEIGHT_TYPE {edge_type}")

    demand_rows = sections.get("DEMAND_SECTION", [])
    if len(demand_rows) != dim or any(len(r) != 2 for r in demand_rows):
        raise ValueError("non-rectangular DEMAND_SECTION")
    demands = {int(r[0]): int(r[1]) for r in demand_rows}

    depot_ids = [int(r[0]) for r in sections.get("DEPOT_SECTION", []) if int(r[0]) != -1]
    depot_id = depot_ids[0] if depot_ids else order[0]

    tf = convention.factor
    scale_t = lambda v: convention.apply(v) if tf != 1 else int(v)  # noqa: E731
    services = {int(r[0]): scale_t(r[1]) for r in sections.get("SERVICE_TIME_SECTION", [])}
    windows = {
        int(r[0]): (scale_t(r[1]), scale_t(r[2]))
        for r in sections.get("TIME_WINDOW_SECTION", [])
    }

    # Re-index: depot -> 0, clients 1..n in file order.
    file_ids = [depot_id] + [i for i in order if i != depot_id]
    pos_of = {fid: pos for pos, fid in enumerate(order)}
    perm = [pos_of[fid] for fid in file_ids]
    dist = dist[np.ix_(perm, perm)]
    coords = coords[perm]

    depot_win = windows.get(depot_id, (0, TW_OPEN))
    depot = Depot(
        x=int(coords[0][0]),
        y=int(coords[0][1]),
        tw_early=depot_win[0],
        tw_late=depot_win[1],
    )
    clients = []
    for idx, fid in enumerate(file_ids[1:], start=1):
        win = windows.get(fid, (0, TW_OPEN))
        clients.append(
            Client(
                index=idx,
                x=int(coords[idx][0]),
                y=int(coords[idx][1]),
                demand=demands.get(fid, 0),
                service_duration=services.get(fid, 0),
                tw_early=win[0],
                tw_late=win[1],
            )
        )

    if "VEHICLES" in headers:
        num_vehicles = int(headers["VEHICLES"])
    else:
        # generous default: twice the bin-packing bound plus slack
        packing = -(-sum(c.demand for c in clients) // capacity)
        num_vehicles = min(dim - 1, 2 * packing + 5)
    fleet = Fleet(num_vehicles=num_vehicles, capacity=capacity)
    return ProblemData(depot, clients, fleet, dist, dist.copy())


# ---------------------------------------------------------------------------
# Solution files

def write_solution(routes, cost, path):
    """Write routes ("Route #k: ...") and a final "Cost" line."""
    if hasattr(routes, "route_lists"):
        routes = routes.route_lists()
    lines = []
    k = 0
    for route in routes:
        if not route:
            continue
        k += 1
        lines.append(f"Route #{k}: " + " ".join(str(c) for c in route))
    lines.append(f"Cost {cost}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_solution(path) -> tuple[list[list[int]], float]:
    """Parse a solution file written by :func:`write_solution`."""
    routes: list[list[int]] = []
    cost = 0.0
    for ln in Path(path).read_text().splitlines():
        ln = ln.strip()
        if not ln:
            continue
        match = re.match(r"Route #(\d+)\s*:\s*(.*)", ln)
        if match:
            routes.append([int(tok) for tok in match.group(2).split()])
        elif ln.startswith("Cost"):
            cost = float(ln.split()[1])
    return routes, cost


# ---------------------------------------------------------------------------
# Best-known-solution tables

def read_bks(path) -> dict[str, float]:
    """Read a CSV of ``instance,cost`` rows into a lookup table."""
    table: dict[str, float] = {}
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip() or row[0].lstrip().startswith("#"):
                continue
            name = row[0].strip()
            if name.lower() == "instance":
                continue
            if len(row) < 2:
                raise ValueError(f"missing cost for instance {name}")
            try:
                cost = float(row[1])
            except ValueError:
                raise ValueError(f"unparsable cost for instance {name}") from None
            if name in table:
                raise ValueError(f"duplicate instance {name}")
            if cost <= 0:
                raise ValueError(f"non-positive cost for instance {name}")
            table[name] = cost
    return table
