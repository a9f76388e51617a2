from __future__ import annotations

import json
import subprocess
import sys

import pytest

from kempf.cli import JobSpec, main, run, sweep
from kempf.errors import LimitExceeded, ParseError, ValidationError

J3 = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]


def test_nilpotent_job():
    report = run({"command": "nilpotent", "group": "GL(3)", "input": J3})
    r = report["result"]
    assert report["status"] == "ok"
    assert r["partitions"] == [[3]] and r["lambda_a"] == [2, 0, -2]
    assert r["primitive_optimal"] == [1, 0, -1] and r["ratio_sq"] == "1/2" and r["scaling"] == 2
    assert r["centralizer"]["dims_by_grade"] == {"0": 1, "2": 1, "4": 1}
    assert r["optimal"]["certificate"] == [
        {"weight": [0, 1, -1], "coefficient": "1/2"},
        {"weight": [1, -1, 0], "coefficient": "1/2"},
    ]


def test_oracle_job():
    r = run({"command": "oracle", "group": "GL(2)", "input": [[1, -1]], "oracle_bound": 3})["result"]
    assert r["ratio_sq"] == "2" and r["argmax"] == [[1, -1]]


def test_optimize_semistable():
    report = run({"command": "optimize", "input": [[1, 0], [-1, 0]]})
    assert report["status"] == "semistable"
    assert main(["optimize", "--weights", "[[1,0],[-1,0]]"]) == 3


def test_round_trip_and_determinism():
    for job in (
        {"command": "nilpotent", "input": J3, "form": {"seed": [[2, 1, 0], [1, 2, 1], [0, 1, 2]]}},
        {"command": "optimize", "group": "SL:3", "input": {"weights": [[1, -1, 0], [0, 1, -1]]}},
        {"command": "transfer-check", "input": [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
         "subgroup": "centralizer:diag(1,1,-1,-1)"},
        {"command": "oracle", "input": {"matrix": J3}, "oracle_bound": 2},
    ):
        report = run(job)
        assert run(report["job"]) == report
        assert json.dumps(run(job), sort_keys=True) == json.dumps(report, sort_keys=True)


def test_rationals_as_strings():
    report = run({"command": "nilpotent", "input": [["0", "1/2"], [0, 0]]})
    assert report["job"]["input"]["matrix"] == [["0", "1/2"], ["0", "0"]]
    assert report["result"]["lambda_a"] == [1, -1]


@pytest.mark.parametrize(
    "job, path",
    [
        ({"command": "nilpotent", "input": [[0, 1.5], [0, 0]]}, "$.input[0][1]"),
        ({"command": "frobnicate"}, "$.command"),
        ({"command": "nilpotent"}, "$.input"),
        ({"command": "nilpotent", "input": J3, "group": "GL:4"}, "$.input"),
        ({"command": "nilpotent", "input": J3, "form": {"matrix": [[1, 0, 0], [0, 2, 0], [0, 0, 1]]}}, "$.form.matrix"),
        ({"command": "transfer-check", "input": J3, "subgroup": "levi:1,2"}, "$.subgroup"),
        ({"command": "oracle", "input": [[1]], "oracle_bound": 0}, "$.oracle_bound"),
        ({"command": "optimize", "input": [[1]], "colour": 1}, "$.colour"),
    ],
)
def test_validation_paths(job, path):
    with pytest.raises(ValidationError) as info:
        JobSpec.from_json(job)
    assert info.value.path == path


def test_parse_error_path(tmp_path):
    bad = tmp_path / "job.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        from kempf.cli import load_json_arg

        load_json_arg("@" + str(bad), "$")
    assert main(["run", str(bad)]) == 4


def test_sweep_examples():
    s = sweep(3)
    assert s["total"] == 6 and s["all_pass"]
    assert sweep(0) == {"cases": [], "total": 0, "failed": 0, "all_pass": True}
    with pytest.raises(LimitExceeded):
        sweep(7)
    assert main(["sweep", "--nmax", "7"]) == 4


def test_env_bound(monkeypatch, capsys):
    monkeypatch.setenv("KEMPF_ORACLE_BOUND", "2")
    assert main(["oracle", "--weights", "[[1,-1]]"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["job"]["oracle_bound"] == 2


def test_matrix_from_file(tmp_path, capsys):
    f = tmp_path / "e.json"
    f.write_text(json.dumps([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]))
    assert main(["transfer-check", "--matrix", "@" + str(f), "--subgroup", "centralizer:diag(1,1,-1,-1)"]) == 0
    r = json.loads(capsys.readouterr().out)["result"]
    assert r["holds"] and r["holds_a"] and r["lambda_H"] == [1, -1, 1, -1] and r["value_H_sq"] == "1"


def test_console_script_usage_error():
    proc = subprocess.run([sys.executable, "-m", "kempf.cli", "optimize"], capture_output=True, text=True)
    assert proc.returncode == 2
