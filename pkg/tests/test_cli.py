import csv
import io
import json
import subprocess
import sys

import pytest

from rmcenter.cli import BENCH_COLUMNS, main
from rmcenter.instances import load_instance
from rmcenter.metric import validate_metric

COLLINEAR = {
    "format": 1,
    "points": {"euclidean": [[0], [1], [2]]},
    "weights": [1, 1, 1],
    "m": 3,
    "matroid": {"type": "uniform", "k": 1},
}


def write(path, obj):
    path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_collinear(tmp_path, capsys):
    code, out, _ = run(capsys, "solve", write(tmp_path / "i.json", COLLINEAR))
    report = json.loads(out)
    assert code == 0
    assert report["solution"]["r"] == 1 and report["solution"]["radius"] == 5
    assert report["solution"]["feasible"] is True
    assert "trace" not in report["solution"]
    assert report["instrumentation"]["greedy_iterations"] == report["rank"] == 1


def test_solve_zero_target_and_infeasible(tmp_path, capsys):
    code, out, _ = run(capsys, "solve", write(tmp_path / "a.json", {**COLLINEAR, "m": 0}))
    assert code == 0 and json.loads(out)["solution"]["radius"] == 0
    code, out, err = run(capsys, "solve", write(tmp_path / "b.json", {**COLLINEAR, "m": 4}))
    assert code == 2 and "infeasible" in err
    assert json.loads(out)["solution"]["feasible"] is False


def test_solve_flags(tmp_path, capsys):
    path = write(tmp_path / "i.json", COLLINEAR)
    out_file = tmp_path / "out.json"
    code, out, _ = run(capsys, "solve", path, "--fixed-r", "0", "--trace", "--out", out_file)
    assert code == 2 and out == ""
    report = json.loads(out_file.read_text())
    assert report["solution"]["r"] == 0 and report["solution"]["covered_weight"] == 1
    assert report["solution"]["trace"] == [{"center": 0, "gain": 1.0, "uncovered": 2, "probes": 1}]
    code, out, _ = run(capsys, "solve", path, "--timing")
    assert "wall_ms" in json.loads(out)["instrumentation"]


def test_solve_validate_metric(tmp_path, capsys):
    bad = {**COLLINEAR, "points": {"matrix": [[0, 10, 1], [10, 0, 1], [1, 1, 0]]}}
    path = write(tmp_path / "i.json", bad)
    assert run(capsys, "solve", path)[0] == 0
    code, _, err = run(capsys, "solve", path, "--validate-metric")
    assert code == 1 and "(0, 1, 2)" in err


@pytest.mark.parametrize(
    "content, needle",
    [
        ('{"points": {\n  "matrix": [[0]],\n}', "line 3"),
        ({**COLLINEAR, "matroid": {"type": "uniform"}}, "$.matroid"),
        ({**COLLINEAR, "weights": [1, -1, 1]}, "$.weights[1]"),
        ({**COLLINEAR, "points": {"matrix": [[0, 1], [1, 0]]}}, "$.points.matrix"),
        ({**COLLINEAR, "matroid": {"type": "partition", "classes": [0], "capacities": [1]}}, "$.matroid"),
        ({**COLLINEAR, "format": 2}, "$.format"),
    ],
)
def test_schema_diagnostics(tmp_path, capsys, content, needle):
    code, _, err = run(capsys, "solve", write(tmp_path / "i.json", content))
    assert code == 1
    assert needle in err


def test_exact(tmp_path, capsys):
    code, out, _ = run(capsys, "exact", write(tmp_path / "a.json", COLLINEAR))
    assert code == 0
    result = json.loads(out)
    assert result["opt_radius"] == 1 and result["witness"] == [1]
    single = {"points": {"matrix": [[0]]}, "weights": [2], "m": 2, "matroid": {"type": "uniform", "k": 1}}
    code, out, _ = run(capsys, "exact", write(tmp_path / "b.json", single))
    assert code == 0 and json.loads(out)["opt_radius"] == 0
    code, out, _ = run(capsys, "exact", write(tmp_path / "c.json", {**COLLINEAR, "m": 9}))
    assert code == 2 and json.loads(out)["feasible"] is False
    code, _, err = run(capsys, "exact", write(tmp_path / "d.json", COLLINEAR), "--max-enum", "2")
    assert code == 1 and "refusing" in err


def test_gen_is_deterministic(tmp_path, capsys):
    a = run(capsys, "gen", "--seed", 7, "--n", 9, "--matroid", "graphic")[1]
    b = run(capsys, "gen", "--seed", 7, "--n", 9, "--matroid", "graphic")[1]
    c = run(capsys, "gen", "--seed", 8, "--n", 9, "--matroid", "graphic")[1]
    assert a == b != c


def test_gen_euclidean_is_metric(tmp_path, capsys):
    out = tmp_path / "e.json"
    assert run(capsys, "gen", "--seed", 1, "--geometry", "euclidean", "--dim", 2, "--out", out)[0] == 0
    inst, _ = load_instance(out)
    assert validate_metric(inst) == []


def test_gen_partition_capacities(tmp_path, capsys):
    for seed in range(20):
        out = json.loads(run(capsys, "gen", "--seed", seed, "--matroid", "partition", "--classes", 3)[1])
        assert len(out["matroid"]["capacities"]) == 3
        assert sum(out["matroid"]["capacities"]) >= 1


@pytest.mark.parametrize(
    "argv",
    [
        ["--geometry", "graph", "--dim", "3"],
        ["--geometry", "euclidean", "--edge-prob", "0.5"],
        ["--matroid", "uniform", "--classes", "2"],
        ["--weight-min", "5", "--weight-max", "2"],
        ["--n", "0"],
        ["--count", "3"],
    ],
)
def test_gen_contradictory_flags(capsys, argv):
    assert run(capsys, "gen", *argv)[0] == 1


@pytest.mark.parametrize("geometry", ["graph", "euclidean"])
@pytest.mark.parametrize("matroid", ["uniform", "partition", "graphic", "transversal"])
def test_gen_solve_roundtrip(tmp_path, capsys, geometry, matroid):
    for seed in range(3):
        path = tmp_path / f"{seed}.json"
        code, _, _ = run(capsys, "gen", "--seed", seed, "--n", 8, "--geometry", geometry, "--matroid", matroid, "--out", path)
        assert code == 0
        code, out, err = run(capsys, "solve", path, "--validate-metric")
        assert code in (0, 2), err
        assert json.loads(out)["solution"]


def test_verify(tmp_path, capsys):
    inst = write(tmp_path / "i.json", COLLINEAR)
    sol_path = tmp_path / "s.json"
    run(capsys, "solve", inst, "--out", sol_path)
    code, out, _ = run(capsys, "verify", inst, sol_path)
    assert code == 0 and json.loads(out)["passed"]

    sol = json.loads(sol_path.read_text())["solution"]
    dependent = {**sol, "centers": [0, 1]}
    code, out, _ = run(capsys, "verify", inst, write(tmp_path / "d.json", dependent))
    assert code == 2 and not json.loads(out)["checks"]["centers_independent"]

    understated = {**sol, "r": 0.2, "radius": 1.0}
    code, out, _ = run(capsys, "verify", inst, write(tmp_path / "u.json", understated))
    assert code == 2 and not json.loads(out)["checks"]["coverage_meets_target"]

    assert run(capsys, "verify", inst, write(tmp_path / "bad.json", "{}"))[0] == 1


def _read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_bench_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    assert run(capsys, "gen", "--seed", 100, "--count", 50, "--n", 8, "--matroid", "partition", "--out", corpus)[0] == 0
    code, out, err = run(capsys, "bench", corpus)
    rows = _read_csv(out)
    assert code == 0 and err == ""
    assert len(rows) == 50
    assert [r["file"] for r in rows] == sorted(r["file"] for r in rows)
    for row in rows:
        if row["ratio"]:
            assert float(row["ratio"]) <= 5.0
        assert int(row["greedy_iterations"]) == int(row["rank"])
        assert int(row["max_probes_per_iteration"]) <= int(row["n"])


def test_bench_empty_and_malformed(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    code, out, _ = run(capsys, "bench", empty)
    assert code == 0 and out == ",".join(BENCH_COLUMNS) + "\n"

    corpus = tmp_path / "corpus"
    run(capsys, "gen", "--seed", 5, "--count", 49, "--n", 6, "--out", corpus)
    (corpus / "zz_broken.json").write_text("{not json")
    code, out, err = run(capsys, "bench", corpus, "--no-timing")
    assert code == 1
    assert len(_read_csv(out)) == 49
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("error,zz_broken.json,")


def test_module_entry_point(tmp_path):
    path = write(tmp_path / "i.json", COLLINEAR)
    proc = subprocess.run([sys.executable, "-m", "rmcenter", "solve", path], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["solution"]["radius"] == 5
