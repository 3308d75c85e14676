"""Render run statistics and solutions to static SVG figures."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def plot_diversity(rows, ax):
    """Average subpopulation diversity over the iterations."""
    its = [r.iteration for r in rows]
    ax.plot(its, [r.feas_div for r in rows], label="feasible", c="tab:green")
    ax.plot(its, [r.infeas_div for r in rows], label="infeasible", c="tab:red")
    ax.set_title("Population diversity")
    ax.set_xlabel("iteration")
    ax.set_ylabel("avg diversity")
    ax.legend(frameon=False)


def plot_objectives(rows, ax):
    """Best and average objective of both subpopulations."""
    def series(values):
        return [v if not math.isnan(v) else None for v in values]

    its = [r.iteration for r in rows]
    ax.plot(its, series([r.feas_best for r in rows]), label="feas best", c="tab:green")
    ax.plot(
        its,
        series([r.feas_avg for r in rows]),
        label="feas avg",
        c="tab:green",
        alpha=0.4,
    )
    ax.plot(its, series([r.infeas_best for r in rows]), label="infeas best", c="tab:red")
    ax.plot(
        its,
        series([r.infeas_avg for r in rows]),
        label="infeas avg",
        c="tab:red",
        alpha=0.4,
    )
    ax.set_title("Objectives")
    ax.set_xlabel("iteration")
    ax.set_ylabel("penalised cost")
    ax.legend(frameon=False)


def plot_iteration_times(rows, ax, window: int = 25):
    """Per-iteration runtimes with a rolling-mean trendline."""
    its = [r.iteration for r in rows]
    times = [r.iter_s for r in rows]
    ax.plot(its, times, c="tab:blue", alpha=0.35, label="iteration")
    if len(times) >= 2:
        w = min(window, len(times))
        kernel = np.ones(w) / w
        trend = np.convolve(times, kernel, mode="valid")
        ax.plot(its[w - 1 :], trend, c="tab:blue", label="trend")
    ax.set_title("Iteration runtimes")
    ax.set_xlabel("iteration")
    ax.set_ylabel("seconds")
    ax.legend(frameon=False)


def plot_solution(solution, data, ax):
    """Routes as polylines over the client coordinates."""
    ax.scatter(
        [c.x for c in data.clients],
        [c.y for c in data.clients],
        s=12,
        c="black",
        zorder=3,
    )
    ax.scatter([data.depot.x], [data.depot.y], marker="*", s=160, c="tab:orange", zorder=4)
    for route in solution.routes:
        xs = [data.depot.x] + [data.clients[c - 1].x for c in route] + [data.depot.x]
        ys = [data.depot.y] + [data.clients[c - 1].y for c in route] + [data.depot.y]
        ax.plot(xs, ys, linewidth=0.9)
    ax.set_title(f"Best solution ({solution.num_routes} routes)")
    ax.set_aspect("equal", adjustable="datalim")


def save_report_figures(rows, out_dir, solution=None, data=None) -> list[Path]:
    """Write the standard report panels as SVG files; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    panels = [
        ("diversity.svg", plot_diversity),
        ("objectives.svg", plot_objectives),
        ("runtimes.svg", plot_iteration_times),
    ]
    for filename, panel in panels:
        fig, ax = plt.subplots(figsize=(7, 4))
        panel(rows, ax)
        fig.tight_layout()
        path = out_dir / filename
        fig.savefig(path)
        plt.close(fig)
        written.append(path)

    if solution is not None and data is not None:
        fig, ax = plt.subplots(figsize=(6, 6))
        plot_solution(solution, data, ax)
        fig.tight_layout()
        path = out_dir / "solution.svg"
        fig.savefig(path)
        plt.close(fig)
        written.append(path)
    return written
