"""Command-line front end: subcommands, exit codes and JSON output."""

import io
import json
import subprocess
import sys

import pytest

from torusfib import cli
from torusfib import constraints as cs

S, T = "(3 2 1a 1b 2 3)", "(4 3 2 1a 1b 2 3 4)"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_all_and_single():
    code, out, _ = run("verify", "--all")
    assert code == 0 and "FAILED" not in out
    assert out.count(" ok ") >= 9
    code, out, _ = run("verify", "lift")
    assert code == 0 and out.startswith("lift") and " ms" in out


def test_verify_usage_errors():
    assert run("verify", "no-such")[0] == 2
    assert run("verify")[0] == 2
    assert run("verify", "lift", "--all")[0] == 2
    assert run("verify", "baykur-korkmaz-closed", "--mode", "pi1")[0] == 2


def test_feasible_examples():
    code, out, _ = run("feasible", "-g", "2", "-h", "1", "-k", "6")
    assert code == 0 and "survivors: none" in out
    assert "(n,s,sigma)=(2,4,-4): fails" in out
    code, out, _ = run("feasible", "-g", "5", "-h", "1", "-k", "3")
    assert "survivors: (3, 0, 1)" in out
    code, out, _ = run("feasible", "-g", "2", "-k", "7")
    assert "survivors: (4, 3, -3)" in out
    assert run("feasible", "-g", "0", "-k", "3")[0] == 2
    assert run("feasible", "-g", "2", "-k", "3", "--disable", "C7")[0] == 2


def test_bounds_examples():
    code, out, _ = run("bounds", "-gmax", "6")
    assert code == 0
    rows = [l.split()[:2] for l in out.splitlines()[1:]]
    assert rows == [["1", "[12,12]"], ["2", "[7,7]"], ["3", "[3,5]"], ["4", "[3,5]"],
                    ["5", "[3,4]"], ["6", "[3,4]"]]
    code, out, _ = run("bounds", "--gmax", "19")
    assert out.splitlines()[-1].split()[:2] == ["19", "[3,3]"]
    code, out, _ = run("bounds", "-gmax", "1")
    assert out.splitlines()[1].split()[:2] == ["1", "[12,12]"]
    assert run("bounds", "-gmax", "0")[0] == 2


def test_act_examples():
    code, out, _ = run("act", "--word", f"{S} {T}", "--curve", "4")
    assert code == 0 and "status: fixed-unoriented" in out
    for curve in ("1a", "3", "delta1"):
        code, out, _ = run("act", "--word", "", "--curve", curve)
        assert code == 0 and "status: fixed-oriented" in out
    assert run("act", "--word", "1a 5", "--curve", "3")[0] == 2
    assert run("act", "--word", "1a", "--curve", "zz")[0] == 2
    assert run("act", "--word", "(1a", "--curve", "3")[0] == 2


def test_json_roundtrip():
    code, out, _ = run("feasible", "-g", "2", "-k", "7", "--json")
    data = json.loads(out)
    rep = cs.FeasibilityReport.from_json(data)
    assert rep == cs.feasible_tuples(2, 1, 7)
    assert json.loads(rep.dumps()) == data
    code, out, _ = run("verify", "three-chain", "--json")
    data = json.loads(out)
    assert data["results"][0]["verified"] is True
    assert json.loads(json.dumps(data)) == data
    code, out, _ = run("bounds", "-gmax", "3", "--json")
    assert [r["upper"] for r in json.loads(out)["rows"]] == [12, 7, 5]


def test_unknown_flag_and_missing_command():
    assert run("verify", "lift", "--bogus")[0] == 2
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2


def test_validate_and_bad_data_dir(tmp_path):
    code, out, _ = run("validate")
    assert code == 0 and " 0 failures" in out
    assert run("verify", "lift", "--data-dir", str(tmp_path / "missing"))[0] == 3
    (tmp_path / "sigma_2_2.json").write_text("{broken")
    assert run("validate", "--data-dir", str(tmp_path))[0] == 3


def test_env_var_data_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("TORUSFIB_DATA", str(tmp_path))
    assert run("validate")[0] == 3


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "torusfib.cli", "bounds", "-gmax", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "[7,7]" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "torusfib.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify" in proc.stdout
