import json
import subprocess
import sys

import pytest

from stacksort.cli import annotate, main
from stacksort.hooks import tableau_membership
from stacksort.tableau import StackSortingTableau

EXAMPLE = "9 3 10 7 8 2 6 1 4 5 0"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_trace_text(capsys):
    code, out, _ = run(capsys, "trace", EXAMPLE)
    assert code == 0
    assert out.splitlines() == [
        "(9 3) 10 (7) 8 (2) 6 (1 4) 5 0",
        "(3) 9 7 (2 1) 4 0 5 6 8 10",
        "3 (1) 2 0 4 5 6 7 8 9 10",
        "1 0 2 3 4 5 6 7 8 9 10",
        "0 1 2 3 4 5 6 7 8 9 10",
    ]


def test_trace_accepts_commas_and_split_args(capsys):
    code, out, _ = run(capsys, "trace", "2,", "3", "1")
    assert code == 0
    assert out.splitlines() == ["2 3 1", "2 1 3", "1 2 3"]


def test_trace_json(capsys):
    code, out, _ = run(capsys, "trace", "2 1 0", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["iterates"] == [[2, 1, 0], [0, 1, 2]]
    assert data["columns"] == [[2, 1]] and data["blocks"] == [[[], []]]


def test_annotate_omits_empty_blocks():
    assert annotate((2, 1, 0)) == "2 1 0"
    assert annotate((1, 2, 0)) == "(1) 2 0"


def test_tableau_text(capsys):
    code, out, _ = run(capsys, "tableau", EXAMPLE)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "shape 3,2,1,4"
    assert [ln.split() for ln in lines[1:]] == [["10", "9", "3"], ["8", "7"], ["6"],
                                                 ["5", "4", "2", "1"]]


def test_tableau_json_round_trip(capsys):
    code, out, _ = run(capsys, "tableau", EXAMPLE, "--format", "json")
    T = StackSortingTableau.from_json(out)
    assert code == 0
    assert T.shape == (3, 2, 1, 4)
    p = tuple(int(x) for x in EXAMPLE.split())
    assert tableau_membership(p, T.shape, T.to_cell)


def test_tableau_rejects_unprimed(capsys):
    code, _, err = run(capsys, "tableau", "2 1 3")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv, expected", [
    (["count", "--n", "5", "--t", "2"], "21\n"),
    (["count", "--n", "0", "--t", "1"], "1\n"),
    (["count", "--n", "9", "--t", "3"], "13337\n"),
])
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_count_all_and_formats(capsys):
    code, out, _ = run(capsys, "count", "--n", "4", "--t", "2", "--all")
    assert code == 0 and out.splitlines() == ["1 1", "2 2", "3 4", "4 9"]
    code, out, _ = run(capsys, "table", "--max-n", "3", "--t", "3", "--format", "csv")
    assert out.splitlines() == ["n,count", "1,1", "2,2", "3,6"]
    code, out, _ = run(capsys, "table", "--max-n", "30", "--t", "2", "--format", "json")
    data = json.loads(out)
    assert data["t"] == 2 and data["rows"][-1] == {"n": 30, "count": "1697385471211"}


def test_usage_errors(capsys):
    assert run(capsys, "count", "--t", "2")[0] == 2
    assert run(capsys, "count", "--n", "-1", "--t", "2")[0] == 2
    assert run(capsys, "trace", "1 1 0")[0] == 2
    assert run(capsys, "trace", "a b")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_guards(capsys):
    code, _, err = run(capsys, "oracle", "--n", "10", "--t", "2")
    assert code == 3 and "guard" in err
    assert run(capsys, "count", "--n", "12", "--t", "3", "--guard-states", "5")[0] == 3
    assert run(capsys, "oracle", "--n", "4", "--t", "2", "--guard-oracle", "3")[0] == 3


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "6", "--t", "2", "--compare-dp")
    assert code == 0 and out.splitlines() == ["brute 51", "dp 51", "MATCH"]
    code, out, _ = run(capsys, "oracle", "--n", "5", "--t", "3", "--format", "json",
                       "--threads", "2")
    assert json.loads(out) == {"n": 5, "t": 3, "brute": "60"}


def test_oracle_threads_from_env(capsys, monkeypatch):
    monkeypatch.setenv("STACKSORT_THREADS", "2")
    code, out, _ = run(capsys, "oracle", "--n", "5", "--t", "2")
    assert code == 0 and out == "brute 21\n"


def test_oracle_mismatch_exit(capsys, monkeypatch):
    from stacksort import dp
    monkeypatch.setattr(dp, "count_sortable", lambda n, t, guard=None: -1)
    code, out, _ = run(capsys, "oracle", "--n", "4", "--t", "2", "--compare-dp")
    assert code == 1 and "MISMATCH" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4")
    lines = out.splitlines()
    assert code == 0 and lines and all(ln.startswith("PASS") for ln in lines)
    assert any("classic_counts" in ln for ln in lines)
    code, out, _ = run(capsys, "verify", "--n", "3", "--suite", "hooks", "--format", "json")
    assert code == 0 and [d["property"] for d in json.loads(out)] == ["hook_closed_form"]


def test_verify_reports_failure(capsys, monkeypatch):
    from stacksort import oracle
    monkeypatch.setattr(oracle, "zeilberger", lambda n: 0)
    code, out, _ = run(capsys, "verify", "--n", "3", "--suite", "classic")
    assert code == 1 and out.startswith("FAIL classic_counts")


def test_motzkin(capsys):
    code, out, err = run(capsys, "motzkin", "--max-n", "10")
    assert code == 0 and err == ""
    assert out.splitlines()[-1] == "10 2188 2188 ok"
    code, out, _ = run(capsys, "motzkin", "--max-n", "2", "--format", "csv")
    assert out.splitlines() == ["n,count,motzkin,match", "1,1,1,true", "2,2,2,true"]


def test_motzkin_warns_without_failing(capsys, monkeypatch):
    from stacksort import oracle
    monkeypatch.setattr(oracle, "motzkin", lambda n: 0)
    code, out, err = run(capsys, "motzkin", "--max-n", "3")
    assert code == 0 and "WARN" in err and "DIFFERS" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stacksort", "count", "--n", "5", "--t", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "21\n"


def test_trace_small_inputs(capsys):
    assert run(capsys, "trace", "0")[1] == "0\n"
    code, out, _ = run(capsys, "trace", "1 3 2 4")
    assert code == 0 and out.splitlines() == ["1 3 2 4", "1 2 3 4"]


@pytest.mark.parametrize("perm, rows", [("2 1 0", [["2"], ["1"]]), ("1 0", [["1"]])])
def test_tableau_small(capsys, perm, rows):
    code, out, _ = run(capsys, "tableau", perm)
    assert code == 0 and [ln.split() for ln in out.splitlines()[1:]] == rows


def test_table_t3(capsys):
    code, out, _ = run(capsys, "table", "--t", "3", "--max-n", "7")
    assert code == 0 and [ln.split()[1] for ln in out.splitlines()] == \
        ["1", "2", "6", "18", "60", "218", "826"]


def test_motzkin_twelve(capsys):
    code, out, _ = run(capsys, "motzkin", "--max-n", "12")
    assert code == 0 and len(out.splitlines()) == 12 and "DIFFERS" not in out


def test_no_scientific_notation(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "22", "--t", "3")
    assert "e+" not in out and "E" not in out
