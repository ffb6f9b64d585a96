import io
import json
import subprocess
import sys

import pytest

from ramanujan58 import verification
from ramanujan58.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_pi_ramanujan_30():
    assert run("pi", "--digits", "30", "--method", "ramanujan") == (0, "3.14159265358979323846264338327\n")


def test_pi_oracle_5():
    assert run("pi", "--digits", "5", "--method", "oracle") == (0, "3.1415\n")


@pytest.mark.parametrize("argv", [
    ("pi", "--digits", "0"),
    ("pi", "--digits", "abc"),
    ("pi", "--method", "bbp"),
    ("inspect", "g57"),
    ("verify", "--filter", "eq999"),
    ("frobnicate",),
    ("pell", "49"),
    ("lseries", "0"),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_inspect_pell29():
    code, out = run("inspect", "pell29")
    assert code == 0
    assert "9801" in out and "1820" in out


def test_inspect_x58():
    code, out = run("inspect", "x58", "--json")
    assert code == 0
    assert json.loads(out)["exact"] == "1/9801"


def test_inspect_g58():
    code, out = run("inspect", "g58", "--precision", "30")
    assert code == 0
    assert "sqrt((5 + sqrt(29))/2)" in out
    assert "2.27872385417084972762920961118" in out


def test_pell_and_lseries_and_lattice():
    assert json.loads(run("pell", "29", "--json")[1])["x"] == 9801
    rec = json.loads(run("lseries", "-8", "--json")[1])
    assert rec["modulus"] == 32 and rec["conductor"] == 8
    rec = json.loads(run("lattice", "58", "--json", "--radius", "100")[1])
    assert rec["csch_route"].startswith("-1.6449340667811275789")


def test_precision_from_environment(monkeypatch):
    monkeypatch.setenv("RAMANUJAN58_PRECISION", "40")
    _, out = run("inspect", "g58", "--json")
    assert len(json.loads(out)["decimal"]) > 40
    monkeypatch.setenv("RAMANUJAN58_PRECISION", "many")
    assert run("inspect", "g58")[0] == 2


def test_verify_filter_legendre():
    code, out = run("verify", "--filter", "eq09")
    assert code == 0
    assert out.startswith("PASS    eq09-legendre")


def test_verify_filter_by_prefix():
    code, out = run("verify", "--filter", "eq84")
    assert code == 0
    assert "eq84-theorem11" in out


def test_verify_json_schema_and_determinism():
    code1, a = run("verify", "--json")
    code2, b = run("verify", "--json")
    assert a == b
    assert code1 == code2 == 0
    records = [json.loads(line) for line in a.splitlines()]
    assert all(list(r) == ["id", "anchor", "values", "residual", "tolerance", "status", "notes"] for r in records)
    assert [r["id"] for r in records] == verification.check_ids()


def test_verify_flags_include_the_documented_four():
    reports = verification.run()
    flagged = {r.id for r in reports if r.status == "flagged"}
    assert set(verification.DOCUMENTED_FLAGS) <= flagged
    assert not [r.id for r in reports if r.status == "fail"]


def test_verify_concurrent_run_is_identical():
    serial = [r.to_json() for r in verification.run(precision=30)]
    parallel = [r.to_json() for r in verification.run(precision=30, workers=4)]
    assert serial == parallel


def test_verify_list():
    code, out = run("verify", "--list")
    assert code == 0
    assert out.split() == verification.check_ids()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ramanujan58", "pi", "--digits", "10"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "3.141592653\n"
