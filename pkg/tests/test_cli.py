import json
import os
import subprocess
import sys

import pytest

from sidoncolor.cli import main
from sidoncolor.graphs import path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_sidon_gen_matches_table_row(capsys):
    code, out = run_json(capsys, "sidon", "gen", "--set", "t", "--k", "2", "--count", "15")
    assert code == 0
    assert out["elements"] == [1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21]
    code, text, _ = run(capsys, "sidon", "gen", "--set", "s", "--k", "2", "--limit", "10", "--csv")
    assert text.strip() == "1,3,5,7,9"


def test_sidon_verify(capsys):
    code, out = run_json(capsys, "sidon", "verify", "--k", "3", "--elements", "2,3")
    assert code == 1 and out["witness"] == {"a": 3, "b": 2, "x": 2, "y": 3}
    code, out = run_json(capsys, "sidon", "verify", "--k", "2", "--elements", "1,3,5,7")
    assert code == 0 and out["k_multiplicative"]


def test_sidon_max_and_density(capsys):
    code, out = run_json(capsys, "sidon", "max", "--n", "10", "--k", "2")
    assert code == 0 and out["cardinality"] == 6 and out["elements"] == [1, 3, 4, 5, 7, 9] and out["optimal"]
    code, out = run_json(capsys, "sidon", "density", "--set", "s", "--k", "29")
    assert out["density"] == {"exact": "442368/2800733", "approx": "0.157947"}


def test_sidon_max_budget(capsys):
    code, out = run_json(capsys, "sidon", "max", "--n", "60", "--k", "3", "--budget", "5")
    assert code == 3 and out["optimal"] is False and out["cardinality"] > 0


def test_usage_errors(capsys):
    assert run(capsys, "sidon", "gen", "--k", "2")[0] == 2
    assert run(capsys, "sidon", "max", "--k", "2")[0] == 2
    assert run(capsys, "color", "solve", "--graph", "Z9")[0] == 2
    assert run(capsys, "color", "solve", "--graph", "P3", "--family", "p7")[0] == 2
    assert run(capsys, "color", "construct", "--graph", "C4", "--method", "acyclic-trees")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["sidon", "gen", "--set", "q", "--k", "2"])
    assert info.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize("graph,expected", [("P3xP3", 5), ("P5^2", 5)])
def test_color_solve(capsys, graph, expected):
    code, out = run_json(capsys, "color", "solve", "--graph", graph, "--family", "p3")
    assert code == 0 and out["value"] == expected and out["optimal"]


def test_color_solve_span_and_lp1(capsys):
    code, out = run_json(capsys, "color", "solve", "--graph", "P7^2", "--measure", "span")
    assert out["value"] == 2
    code, out = run_json(capsys, "color", "solve", "--graph", "P3", "--p", "2")
    assert out["value"] == 3 and out["measure"] == "range"


def test_color_check(capsys, tmp_path):
    code, out = run_json(capsys, "color", "check", "--graph", "P4", "--family", "p4", "--colors", "0,1,0,1")
    assert code == 1 and not out["f_free"]
    f = tmp_path / "c.json"
    f.write_text(json.dumps({"colors": [0, 1, 2, 0]}))
    code, out = run_json(capsys, "color", "check", "--graph", "P4", "--family", "p3", "--coloring", str(f))
    assert code == 0 and out["f_free"] and out["span"] == 2
    code, out = run_json(capsys, "color", "check", "--graph", "P3", "--p", "2", "--colors", "2,0,3")
    assert code == 0 and out["lp1_valid"] and out["lp1_range"] == 3


def test_color_explicit_family(capsys, tmp_path):
    f = tmp_path / "fam.json"
    f.write_text(json.dumps({"graphs": [path(3).to_json()]}))
    code, out = run_json(capsys, "color", "solve", "--graph", "P3xP3", "--family", f"explicit:{f}")
    assert code == 0 and out["value"] == 5


@pytest.mark.parametrize("argv,limit", [
    (["--graph", "P3xP3xP3", "--family", "p3", "--strategy", "r"], 7),
    (["--graph", "C4xC4", "--method", "torus"], 13),
    (["--graph", "P3xP3xP3", "--method", "acyclic-trees"], 4),
    (["--graph", "P5xP5", "--method", "star-trees"], 5),
    (["--graph", "P5^2xP5^2", "--strategy", "t"], 13),
])
def test_color_construct(capsys, argv, limit):
    code, out = run_json(capsys, "color", "construct", *argv)
    assert code == 0 and out["verified"] and out["colours"] <= limit


def test_color_construct_lp1(capsys):
    code, out = run_json(capsys, "color", "construct", "--graph", "C4xC4", "--p", "2", "--strategy", "t")
    assert code == 0 and out["verified"]


def test_reproduce(capsys):
    code, out = run_json(capsys, "reproduce", "t", "--diff")
    assert code == 0 and len(out["rows"]) == 9 and out["rows"][-1]["k"] == [13, 14, 15]
    code, out = run_json(capsys, "reproduce", "grid", "--diff")
    assert [r["bound"] for r in out["rows"]] == [5, 13, 17, 21, 29, 37, 45, 49, 53, 61, 65, 69, 77, 81, 85]
    code, out = run_json(capsys, "reproduce", "s", "--k-max", "10", "--diff")
    assert code == 0 and [r["label"] for r in out["rows"]] == ["2", "3,4", "5,6", "7..10"]
    code, text, _ = run(capsys, "reproduce", "s", "--csv")
    assert text.splitlines()[0] == "k,elements,density" and len(text.splitlines()) == 11


def test_reproduce_diff_reports_mismatch(capsys, monkeypatch):
    from sidoncolor import tables
    monkeypatch.setattr(tables, "GOLDEN_GRID", [5, 14] + tables.GOLDEN_GRID[2:])
    code, _, err = run(capsys, "reproduce", "grid", "--diff")
    assert code == 1 and "entry 1 is 13, stored 14" in err


def _subprocess(args, env=None):
    return subprocess.run([sys.executable, "-m", "sidoncolor", *args], capture_output=True, text=True,
                          env={**os.environ, **(env or {})})


def test_output_byte_stable():
    args = ["color", "construct", "--graph", "P3xC5", "--strategy", "t"]
    first, second = _subprocess(args), _subprocess(args)
    assert first.returncode == 0 and first.stdout == second.stdout


def test_budget_env_variable():
    res = _subprocess(["color", "solve", "--graph", "P3xP3xP3"], env={"SIDON_COLOR_BUDGET": "2"})
    assert res.returncode == 3
    out = json.loads(res.stdout)
    assert out["optimal"] is False and out["value"] >= 7
