import csv
import io
import json
import subprocess
import sys

import pytest

from nanoread.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, out = call(*argv, "--format", "json")
    return code, json.loads(out)


def test_read_text():
    assert call("read", "--x", "011010", "--ell", "3") == (0, "0,1,2,2,2,1,1,0\n")


def test_read_json():
    code, rep = call_json("read", "--x", "011010", "--ell", "3")
    assert code == 0 and rep["read"] == "0,1,2,2,2,1,1,0"
    assert rep["params"] == {"x": "011010", "ell": 3}


def test_perm():
    code, out = call("perm", "--n", "6", "--p", "2", "--ell", "3", "--x", "011010")
    assert code == 0 and out == "1,2,4,5,3,6\n010110\n"
    code, rep = call_json("perm", "--p", "2", "--ell", "3", "--x", "011010")
    assert rep["f_pi"] == "1,2,4,5,3,6" and rep["covered"] == "4"


def test_encode_decode_round_trip():
    code, x = call("encode", "--code", "bch", "--n", "15", "--t", "2", "--ell", "2", "--msg", "1011001")
    assert code == 0
    _, rep = call_json("encode", "--n", "15", "--t", "2", "--ell", "2", "--msg", "1011001")
    assert rep["x"] == x.strip()
    r = [int(v) for v in rep["read"].split(",")]
    r[0] = 2
    r[9] = (r[9] + 1) % 3
    code, out = call("decode", "--n", "15", "--t", "2", "--ell", "2", "--read", ",".join(map(str, r)))
    assert code == 0 and out == "1011001\n"


def test_decode_failure_exit_1():
    code, rep = call_json("decode", "--code", "repetition", "--n", "4", "--ell", "2", "--read", "1,1,0,0,0")
    assert code == 1 and rep["decoded"] is False


def test_simulate_is_reproducible(monkeypatch):
    argv = ("simulate", "--n", "15", "--t", "2", "--ell", "2", "--trials", "300", "--seed", "5")
    a = call_json(*argv)
    monkeypatch.setenv("NANOREAD_THREADS", "2")
    b = call_json(*argv)
    assert a == b
    assert a[0] == 0 and a[1]["success"] == "300"


def test_cover_verify():
    code, rep = call_json("cover-verify", "--n", "8", "--p", "2", "--t", "2", "--ell", "2")
    assert code == 0 and rep["verified"] is True
    assert rep["cliques"] == rep["count_formula"] == "196"


def test_cover_count_text():
    assert call("cover-count", "--m", "2", "--p", "1", "--t", "2", "--format", "text") == \
        (0, "formula=16, enumerated=16, match=true\n")
    code, rep = call_json("cover-count", "--m", "200", "--p", "3", "--t", "2", "--no-enumerate")
    assert code == 0 and rep["count_formula"].isdigit() and len(rep["count_formula"]) > 300


def test_bound():
    code, rep = call_json("bound", "--n", "8", "--t", "2", "--ell", "2", "--p", "2")
    assert code == 0 and rep["cover_size"] == "196"
    assert rep["bound"] == pytest.approx(0.385290155884793)


def test_mis():
    code, rep = call_json("mis", "--n", "5", "--ell", "2", "--t", "1", "--p", "1")
    assert code == 0 and rep["mis"] == "10" and rep["exact"] is True and rep["verified"] is True
    assert len(rep["witness"]) == 10


def test_code_check():
    assert call("code-check", "--words", "011010,101100", "--ell", "3", "--t", "1", "--format", "text")[0] == 1
    code, rep = call_json("code-check", "--code", "bch", "--n", "15", "--t", "2", "--ell", "2")
    assert code == 0 and rep["verified"] is True and rep["words"] == "128"


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    code, printed = call("sweep", "--ns", "15,63", "--output", str(out))
    assert code == 0 and printed == ""
    rows = list(csv.DictReader(out.open()))
    assert [r["n"] for r in rows] == ["15", "63"]
    assert [r["code_redundancy"] for r in rows] == ["8", "12"]


@pytest.mark.parametrize("argv", [
    ("read", "--x", "", "--ell", "3"),
    ("read", "--x", "0120", "--ell", "3"),
    ("read", "--x", "01", "--ell", "0"),
    ("encode", "--n", "15", "--ell", "2", "--msg", "101"),
    ("decode", "--n", "15", "--ell", "2", "--read", "1,2"),
    ("bound", "--n", "10", "--t", "2", "--ell", "2", "--epsilon", "1.5"),
    ("mis", "--n", "20", "--ell", "2", "--t", "1"),
    ("cover-verify", "--n", "20", "--p", "2", "--t", "2", "--ell", "2"),
    ("frobnicate",),
    (),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nanoread", "read", "--x", "011010", "--ell", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0,1,2,2,2,1,1,0\n"
