"""Exit codes and output of the batch commands."""
import json
import subprocess
import sys

import pytest

from ncbirat.cli import run
from ncbirat.gkcert import shipped_path


def test_verify_shipped_passes(tmp_path):
    report = tmp_path / "r.json"
    res = run(["verify", "sl2", "--report", str(report)])
    assert res.exit_code == 0, res.text
    assert "verdict: pass" in res.text
    assert json.loads(report.read_text())["verdict"] == "pass"


def test_verify_corrupted_fails(tmp_path):
    doc = json.loads(shipped_path("sl2").read_text())
    doc["recovery"][2]["p"] = "z1"
    p = tmp_path / "bad.cert.json"
    p.write_text(json.dumps(doc))
    res = run(["verify", str(p)])
    assert res.exit_code == 1
    assert "generator 3" in res.text


def test_verify_small_ceiling_is_inconclusive(tmp_path):
    res = run(["verify", "sl2", "--bound-ceiling", "0", "--no-growth"])
    assert res.exit_code in (0, 2)


def test_ceiling_from_environment(monkeypatch):
    monkeypatch.setenv("NCBIRAT_BOUND_CEILING", "nope")
    assert run(["verify", "sl2"]).exit_code == 3


@pytest.mark.parametrize("argv", [[], ["verify"], ["verify", "missing.json"], ["frobnicate"],
                                  ["reduce-mod-p", "sl2", "--primes", "4,6"],
                                  ["decide", "toy-poly1.sentence.json", "--char", "4"],
                                  ["rootsys", "info", "Z9"],
                                  ["emit-sentence", "bogus", "--bounds", "toy-poly1.profile.json"]])
def test_usage_errors_exit_3(argv):
    assert run(argv).exit_code == 3


def test_malformed_certificate_exit_3(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{")
    res = run(["verify", str(p)])
    assert res.exit_code == 3 and "line 1" in res.text


def test_reduce_mod_p_table(tmp_path):
    report = tmp_path / "r.json"
    res = run(["reduce-mod-p", "a1_z2", "--primes", "2..13", "--report", str(report)])
    assert res.exit_code == 0, res.text
    assert "bad primes up to 13: 2" in res.text
    rows = json.loads(report.read_text())["primes"]
    assert [r["p"] for r in rows] == [2, 3, 5, 7, 11, 13]
    assert [r["status"] for r in rows][1:] == ["pass"] * 5


def test_emit_and_decide(tmp_path):
    out = tmp_path / "s.json"
    res = run(["emit-sentence", "commutative:1", "--bounds", "toy-poly1.profile.json",
               "-o", str(out)])
    assert res.exit_code == 0 and "unknowns: 13" in res.text
    assert run(["decide", str(out)]).exit_code == 0
    assert run(["decide", "toy-commutative.sentence.json"]).exit_code == 1
    assert run(["decide", "toy-commutative.sentence.json", "--char", "5"]).exit_code == 1


def test_rootsys_info():
    res = run(["rootsys", "info", "B2"])
    assert res.exit_code == 0 and "|W|       8" in res.text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncbirat.cli", "rootsys", "info", "A2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "roots     6" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "ncbirat.cli"], capture_output=True, text=True)
    assert proc.returncode == 3 and "usage" in proc.stderr
