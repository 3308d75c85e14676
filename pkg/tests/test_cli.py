"""Command-line interface: solve, bench, fleet."""

import json

from click.testing import CliRunner

from hgsvrp.cli import main

TINY_VRP = """\
NAME : tiny4
TYPE : CVRP
DIMENSION : 5
EDGE_WEIGHT_TYPE : EUC_2D
CAPACITY : 10
NODE_COORD_SECTION
1 50 50
2 10 10
3 90 10
4 90 90
5 10 90
DEMAND_SECTION
1 0
2 4
3 4
4 4
5 4
DEPOT_SECTION
1
-1
EOF
"""


def write_tiny(tmp_path, name="tiny4.vrp"):
    path = tmp_path / name
    path.write_text(TINY_VRP)
    return path


def test_solve_deterministic_output(tmp_path):
    path = write_tiny(tmp_path)
    runner = CliRunner()
    args = [
        "solve", str(path), "--max-iterations", "100", "--seed", "1", "--json"
    ]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0, first.output
    assert json.loads(first.output)["cost"] == json.loads(second.output)["cost"]
    assert json.loads(first.output)["feasible"] is True


def test_solve_missing_file_exit_2(tmp_path):
    runner = CliRunner()
    result = runner.invoke(main, ["solve", str(tmp_path / "nope.vrp")])
    assert result.exit_code == 2
    assert "cannot read instance" in result.output


def test_solve_writes_solution_stats_and_plots(tmp_path):
    path = write_tiny(tmp_path)
    out = tmp_path / "best.sol"
    stats = tmp_path / "stats.csv"
    plots = tmp_path / "figs"
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "solve", str(path),
            "--max-iterations", "20",
            "--seed", "2",
            "--out", str(out),
            "--stats", str(stats),
            "--plot", str(plots),
        ],
    )
    assert result.exit_code == 0, result.output
    assert out.read_text().strip().endswith("Cost " + result.output.split("cost")[1].split()[0])
    lines = stats.read_text().strip().split("\n")
    assert lines[0].startswith("iteration,elapsed_s")
    assert len(lines) == 21  # header + one row per iteration
    for name in ("diversity.svg", "objectives.svg", "runtimes.svg", "solution.svg"):
        svg = plots / name
        assert svg.exists()
        assert b"<svg" in svg.read_bytes()[:500]


def test_solve_invalid_flag_combination(tmp_path):
    path = write_tiny(tmp_path)
    runner = CliRunner()
    result = runner.invoke(
        main, ["solve", str(path), "--max-runtime", "1", "--max-iterations", "5"]
    )
    assert result.exit_code == 2


def test_bench_report(tmp_path):
    write_tiny(tmp_path, "alpha.vrp")
    write_tiny(tmp_path, "beta.vrp")
    bks = tmp_path / "bks.csv"
    bks.write_text("alpha,200\n")
    report = tmp_path / "report.csv"
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "bench",
            "--instances", str(tmp_path / "*.vrp"),
            "--bks", str(bks),
            "--seeds", "1,2",
            "--max-iterations", "10",
            "--report", str(report),
        ],
    )
    assert result.exit_code == 0, result.output
    lines = report.read_text().strip().split("\n")
    assert lines[0] == "instance,mean_cost,bks,gap_pct,feasible_runs"
    assert lines[1].startswith("alpha,")
    assert lines[2].startswith("beta,")
    assert "n/a" in lines[2]
    assert lines[-1].startswith("Gap of mean,")
    assert "without BKS" in result.output


def test_bench_byte_identical_reports_with_iteration_budget(tmp_path):
    write_tiny(tmp_path, "alpha.vrp")
    runner = CliRunner()
    reports = []
    for name in ("r1.csv", "r2.csv"):
        report = tmp_path / name
        result = runner.invoke(
            main,
            [
                "bench",
                "--instances", str(tmp_path / "alpha.vrp"),
                "--seeds", "1..3",
                "--max-iterations", "8",
                "--report", str(report),
            ],
        )
        assert result.exit_code == 0, result.output
        reports.append(report.read_bytes())
    assert reports[0] == reports[1]


def test_fleet_command(tmp_path):
    path = write_tiny(tmp_path)
    out = tmp_path / "fleet.sol"
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["fleet", str(path), "--max-iterations", "50", "--seed", "1", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    # total demand 16 with capacity 10 needs 2 vehicles
    assert "vehicles 2" in result.output
    assert out.exists()
