import json
import subprocess
import sys

import pytest

from grassfq.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--q", "2", "--n", "4", "--d", "2") == (0, "35\n", "")
    assert run(capsys, "count", "--q", "2", "--n", "4", "--d", "0")[1] == "1\n"
    for method in ("gaussian", "pivot", "poly"):
        assert run(capsys, "count", "--q", "3^2", "--n", "5", "--d", "2", "--method", method)[1] \
            == run(capsys, "count", "--q", "9", "--n", "5", "--d", "2", "--method", "gaussian")[1]


def test_count_rejects_non_prime_power(capsys):
    code, out, err = run(capsys, "count", "--q", "6", "--n", "4", "--d", "2")
    assert code == 1 and out == ""
    assert err == "error: 6 is not a prime power\n"


def test_count_json_and_parallel(capsys):
    code, out, _ = run(capsys, "count", "--q", "2", "--n", "8", "--d", "4",
                       "--parallel", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"q": 2, "n": 8, "d": 4, "method": "pivot", "count": 200787}


def test_poly(capsys):
    assert run(capsys, "poly", "--n", "4", "--d", "2")[1] == "n=4 d=2 deg=4\n1 1 2 1 1\n"
    assert run(capsys, "poly", "--n", "5", "--d", "1")[1].splitlines()[1] == "1 1 1 1 1"
    assert run(capsys, "poly", "--n", "3", "--d", "0")[1].splitlines()[1] == "1"
    out = run(capsys, "poly", "--n", "4", "--d", "2", "--format", "json")[1]
    assert json.loads(out) == {"n": 4, "d": 2, "coeffs": [1, 1, 2, 1, 1]}


def test_enumerate_golden(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "2", "--n", "2", "--d", "1")
    assert code == 0
    assert out == "1 0\n-\n1 1\n-\n0 1\n"


def test_enumerate_record_count(capsys):
    out = run(capsys, "enumerate", "--q", "2", "--n", "6", "--d", "3")[1]
    assert len(out.split("-\n")) == 1395


def test_enumerate_json(capsys):
    out = run(capsys, "enumerate", "--q", "3", "--n", "3", "--d", "2", "--format", "json")[1]
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 13
    assert recs[0] == {"q": 3, "rows": 2, "cols": 3, "entries": [[1, 0, 0], [0, 1, 0]],
                       "pivots": [1, 2]}


def test_enumerate_parallel_same_output(capsys):
    serial = run(capsys, "enumerate", "--q", "3", "--n", "4", "--d", "2")[1]
    parallel = run(capsys, "enumerate", "--q", "3", "--n", "4", "--d", "2", "--parallel", "2")[1]
    assert serial == parallel


def test_enumerate_cap(capsys, monkeypatch):
    code, out, err = run(capsys, "enumerate", "--q", "2", "--n", "4", "--d", "2", "--cap", "10")
    assert code == 2 and out == "" and err.startswith("error:") and err.count("\n") == 1
    code, out, _ = run(capsys, "enumerate", "--q", "2", "--n", "4", "--d", "2", "--cap", "10", "--force")
    assert code == 0 and len(out.split("-\n")) == 35
    monkeypatch.setenv("GRASSFQ_ENUM_CAP", "5")
    assert run(capsys, "enumerate", "--q", "2", "--n", "4", "--d", "2")[0] == 2


def test_pivots(capsys):
    out = run(capsys, "pivots", "--n", "4", "--d", "2")[1]
    assert out.splitlines() == ["1 2", "1 3", "1 4", "2 3", "2 4", "3 4"]
    assert run(capsys, "pivots", "--n", "3", "--d", "3")[1] == "1 2 3\n"
    code, out, err = run(capsys, "pivots", "--n", "2", "--d", "3")
    assert code == 1 and out == "" and err.startswith("error:")
    assert run(capsys, "pivots", "--n", "3", "--d", "2", "--format", "json")[1].splitlines()[0] == "[1, 2]"


def test_canon_stdin(capsys, monkeypatch):
    assert run(capsys, "canon", "--q", "2", stdin="0 1\n1 0\n", monkeypatch=monkeypatch)[1] \
        == "1 0\n0 1\ndim 2\n"
    assert run(capsys, "canon", "--q", "2", stdin="0 0\n", monkeypatch=monkeypatch)[1] == "dim 0\n"
    assert run(capsys, "canon", "--q", "5", stdin="2 4\n1 2\n", monkeypatch=monkeypatch)[1] \
        == "1 2\ndim 1\n"


def test_canon_file_and_json(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"q": 5, "rows": 2, "cols": 2, "entries": [[2, 4], [1, 2]]}))
    out = run(capsys, "canon", "--q", "5", "--input", str(path), "--format", "json")[1]
    assert json.loads(out) == {"q": 5, "rows": 1, "cols": 2, "entries": [[1, 2]], "dim": 1}
    text = tmp_path / "m.txt"
    text.write_text("1 2 0\n2 1 0\n")
    assert run(capsys, "canon", "--q", "3", "--input", str(text))[1] == "1 2 0\ndim 1\n"


def test_canon_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 7\n")
    code, _, err = run(capsys, "canon", "--q", "5", "--input", str(bad))
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, "canon", "--q", "5", "--input", str(tmp_path / "missing"))
    assert code == 1 and err.count("\n") == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "4", "--d", "2")
    assert code == 0 and out.startswith("pass") and "35 = 35 = 35 = 35" in out
    code, out, _ = run(capsys, "verify", "--q", "3", "--n", "3", "--d", "1")
    assert code == 0 and out.startswith("pass") and "13" in out
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "3", "--d", "1", "--format", "json")
    assert json.loads(out)["bijection"] == "ok"


def test_verify_budget(capsys):
    code, out, err = run(capsys, "verify", "--q", "2", "--n", "4", "--d", "2", "--budget", "100")
    assert code == 2 and out == "" and err.startswith("error:")


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import grassfq.oracle
    real = grassfq.oracle.enumerate_grassmannian
    monkeypatch.setattr(grassfq.oracle, "enumerate_grassmannian",
                        lambda *a, **k: iter(list(real(*a, **k))[1:]))
    assert run(capsys, "verify", "--q", "2", "--n", "3", "--d", "1")[0] == 3


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "count", "--q", "2")[0] == 1
    assert run(capsys, "count", "--q", "2", "--n", "x", "--d", "1")[0] == 1
    assert run(capsys, "count", "--q", "2", "--n", "3", "--d", "1", "--method", "bogus")[0] == 1


def test_module_entry_point_is_reproducible():
    cmd = [sys.executable, "-m", "grassfq", "enumerate", "--q", "2", "--n", "2", "--d", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b == b"1 0\n-\n1 1\n-\n0 1\n"
