import json

import pytest

from floatsssp import cli
from floatsssp.cli import main
from floatsssp.graph import Graph, write_dimacs

GEN = "n=40,m=200,delta=0.01,cmax=10,seed=3"


def run_json(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_run_generated_graph(capsys):
    code, report = run_json(capsys, "run", "--gen", GEN)
    assert code == 0
    assert report["format_version"] == 1
    assert report["graph"]["n"] == 40 and report["graph"]["delta"] == 0.01
    assert [s["queue"] for s in report["solvers"]] == ["binary", "dial", "radix", "twolevel:B=16"]
    assert all(s["status"] == "PASS" for s in report["solvers"])
    dists = {tuple(s["dist"]) for s in report["solvers"]}
    assert len(dists) == 1


def test_run_is_deterministic_apart_from_wall_time(capsys):
    _, a = run_json(capsys, "run", "--gen", GEN)
    _, b = run_json(capsys, "run", "--gen", GEN)
    for r in (a, b):
        for s in r["solvers"]:
            s.pop("wall_ns")
    assert a == b


def test_run_csv(capsys):
    assert main(["run", "--gen", GEN, "--queues", "dial,radix", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("queue,status,inserts")
    assert [ln.split(",")[0] for ln in lines[1:]] == ["dial", "radix"]


def test_run_file_with_zero_edge(tmp_path, capsys):
    path = tmp_path / "z.gr"
    write_dimacs(Graph(3, [(0, 1, 1.0), (1, 2, 0.0)]), path)
    assert main(["run", "--file", str(path), "--queues", "binary"]) == 0
    capsys.readouterr()
    assert main(["run", "--file", str(path), "--queues", "dial"]) == cli.EXIT_ZERO_DELTA
    assert "ZeroDeltaRefused" in capsys.readouterr().err


def test_run_single_node(capsys):
    code, report = run_json(capsys, "run", "--gen", "n=1")
    assert code == 0
    assert all(s["dist"] == [0.0] for s in report["solvers"])


def test_run_writes_output_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["run", "--gen", GEN, "-o", str(out)]) == 0
    assert json.loads(out.read_text())["status"] == "PASS"


@pytest.mark.parametrize("argv", [
    ["run"],
    ["run", "--gen", GEN, "--file", "x.gr"],
    ["run", "--gen", "n=5,bogus=1"],
    ["run", "--gen", "m=5"],
    ["run", "--gen", GEN, "--queues", "heap"],
    ["run", "--gen", GEN, "--source", "99"],
    ["verify", "--trials", "0"],
    ["verify", "--ratios", "2"],
    ["verify", "--queues", "binary"],
    ["counterexample", "--n", "2"],
    ["nonsense"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == cli.EXIT_USAGE


def test_missing_file_is_io_error(tmp_path):
    assert main(["run", "--file", str(tmp_path / "none.gr")]) == cli.EXIT_IO


def test_malformed_file_is_io_error(tmp_path, capsys):
    path = tmp_path / "bad.gr"
    path.write_text("p sp 2 1\na 1 2\n")
    assert main(["run", "--file", str(path)]) == cli.EXIT_IO
    assert "line 2" in capsys.readouterr().err


def test_verify_small(capsys):
    code, summary = run_json(capsys, "verify", "--trials", "12", "--max-n", "30",
                             "--max-m", "120", "--format", "json")
    assert code == 0
    assert summary["passed"] == 12 and summary["failures"] == []
    assert set(summary["per_ratio"]) == {"1.0", "0.1", "0.001"}


def test_verify_text(capsys):
    assert main(["verify", "--trials", "3", "--max-n", "10", "--max-m", "20"]) == 0
    assert capsys.readouterr().out.startswith("trials: 3  passed: 3  failed: 0")


def test_run_trial_reports_dial_bound():
    r = cli.run_trial(4, 0.001, 60, 300, 10.0, ("dial",))
    assert r["failures"] == []
    entry = r["queues"]["dial"]
    assert entry["bucket_scans"] <= entry["bound"]


def test_counterexample_text(capsys):
    assert main(["counterexample", "--n", "6", "--epsilon", "0.1", "--surrogate", "0.2"]) == 0
    out = capsys.readouterr().out
    assert "<-- wrong" in out
    assert "mismatch: [2, 3, 4, 5]" in out


def test_counterexample_json(capsys):
    code, report = run_json(capsys, "counterexample", "--format", "json")
    assert code == 0
    assert report["mismatch"] == [2, 3, 4, 5]
    assert report["standard_exact"] is True
    assert [v["node"] for v in report["condition_a_violations"]] == report["mismatch"]


def test_counterexample_three_nodes():
    assert cli.counterexample(3, 0.1, 0.2)["mismatch"] == [2]


def test_counterexample_that_fails_to_demonstrate(capsys):
    # a tiny surrogate under MAX_FLOAT still separates the solid edges into
    # distinct integer keys, so the schedule stays correct
    assert main(["counterexample", "--surrogate", "0.001"]) == cli.EXIT_VERIFY
    assert "DemonstrationFailed" in capsys.readouterr().err


def test_gen_round_trip(tmp_path, capsys):
    path = tmp_path / "g.gr"
    assert main(["gen", GEN, "-o", str(path)]) == 0
    assert main(["run", "--file", str(path), "--queues", "radix"]) == 0
    assert json.loads(capsys.readouterr().out)["graph"]["m"] == 200


def test_gen_figure1(capsys):
    assert main(["gen", "figure1:n=4,epsilon=0.1"]) == 0
    out = capsys.readouterr().out
    assert "p sp 4 6" in out


def test_workers_env(monkeypatch):
    monkeypatch.setenv(cli.WORKERS_ENV, "3")
    assert cli._workers() == 3
    monkeypatch.setenv(cli.WORKERS_ENV, "x")
    with pytest.raises(cli.UsageError):
        cli._workers()


def test_parallel_verify_matches_serial():
    a = cli.verify(6, 30, 100, workers=1)
    b = cli.verify(6, 30, 100, workers=2)
    assert a == b
