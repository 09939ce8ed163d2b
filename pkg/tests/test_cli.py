import io
import json
import subprocess
import sys

import pytest

from qelectric.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_tableaux_count_example():
    code, out, _ = call("tableaux", "count", "--level", "1", "--length", "3", "--shape", "1")
    assert code == 0 and out.strip() == "3"


def test_tableaux_formats():
    code, out, _ = call("tableaux", "count", "--level", "2", "--length", "3", "--shape", "1|", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 6  # 2 walks via the empty shape, 4 via size 2
    code, out, _ = call("tableaux", "dims", "--level", "1", "--length", "4", "--format", "csv")
    assert out.splitlines() == ["level,length,sum_of_squares", "1,4,105"]
    code, out, _ = call("tableaux", "list", "--length", "2", "--shape", "")
    assert out.strip() == "+(1,1,1) -(1,1,1)"


def test_fock_act_example():
    code, out, _ = call("fock", "act", "--charge", "0", "--epsilon", "1", "--i", "0", "--partition", "")
    data = json.loads(out)
    assert code == 0
    assert [t["partition"] for t in data["terms"]] == [[1]]


def test_fock_subcommands():
    code, out, _ = call("fock", "word", "--charge", "0", "--word", "0,1", "--format", "csv")
    assert code == 0 and out.splitlines() == ["partition,coeff", "[],q", "[2],1"]
    code, out, _ = call("fock", "tau", "--partition", "2", "--format", "text")
    assert out.strip() == "1  [1, 1]"
    code, out, _ = call("fock", "bar", "--partition", "", "--format", "text")
    assert out.strip() == "1  []"
    code, out, _ = call("fock", "pair", "--partition", "1", "--other", "", "--word", "0")
    assert code == 0 and json.loads(out)["equal"]
    code, out, _ = call("fock", "multi-act", "--charges", "d1,d2", "--partition", "|", "--i", "d2", "--format", "text")
    assert out.strip() == "1  [[], [1]]"


def test_klr_subcommands():
    code, out, _ = call("klr", "gdim", "--src", "d1", "--tgt", "d1", "--format", "text")
    assert code == 0 and out.strip() == "1"
    code, out, _ = call("klr", "act", "--charges", "0", "--partition", "1", "--i", "1", "--epsilon", "-1")
    data = json.loads(out)
    assert {(tuple(map(tuple, s["shape"])), s["shift"]) for s in data["standards"]} == {(((),), -1), (((2,),), 0)}
    code, out, _ = call("klr", "verify-relations", "--bound", "3", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_reports_name_statement():
    code, out, _ = call("verify", "beta_b", "--window", "3")
    assert code == 0
    first, second = out.splitlines()[:2]
    assert first.startswith("# ") and "b_ji" in first
    assert second.startswith("beta_b: PASS")


def test_verify_hecke_window_four():
    code, out, _ = call("verify", "hecke", "--window", "4", "--format", "csv")
    assert code == 0 and ",pass," in out


def test_usage_errors():
    assert call("frobnicate")[0] == 2
    assert call("fock", "act", "--charges", "0,1", "--i", "0")[0] == 2
    assert call("fock", "act", "--charge", "0")[0] == 2
    assert call("tableaux", "count", "--length", "2", "--shape", "x")[0] == 2
    assert call("tableaux", "count", "--length", "2", "--shape", "1", "--epsilon", "2")[0] == 2
    code, _, err = call("fock", "act", "--charge", "0", "--i", "d1")
    assert code == 2 and "usage" in err


def test_verification_failure_exit_code(monkeypatch):
    from qelectric import checks
    from qelectric.tensor_ops import Report

    def broken(**kwargs):
        rep = Report("broken", statement="always fails")
        rep.record(False, "forced")
        return rep

    monkeypatch.setitem(checks.CHECKS, "degree", broken)
    code, out, _ = call("verify", "degree")
    assert code == 1 and "FAIL" in out


def test_output_is_deterministic():
    args = ("verify", "adjoint", "--seed", "3", "--cases", "30", "--format", "json")
    assert call(*args)[1] == call(*args)[1]
    args = ("fock", "word", "--charge", "d1", "--word", "d1,d1+1,d1-1", "--epsilon", "-1")
    assert call(*args)[1] == call(*args)[1]


@pytest.mark.parametrize("workers", ["1", "2"])
def test_console_entry_point(workers):
    env = {"QELECTRIC_WORKERS": workers, "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "qelectric.cli", "verify", "tau", "--format", "csv"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and "tau,pass" in proc.stdout
