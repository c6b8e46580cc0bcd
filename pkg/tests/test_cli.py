from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from blockforge import cli
from blockforge.frobenius import FrobeniusAnalysis
from blockforge.verify import SuiteResult

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,golden", [
    (["chartab", "S4", "--format", "json"], "chartab_S4.json"),
    (["frobenius", "A4", "--normal", "K4", "--all-primes", "--format", "json"], "frobenius_A4_K4.json"),
    (["blocks", "S4", "-p", "3"], "blocks_S4_p3.txt"),
])
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")
    # repeated runs are byte-identical
    assert run(capsys, *argv)[1] == out


def test_chartab_json_shape(capsys):
    code, out, _ = run(capsys, "chartab", "S4", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and len(rec["chars"]) == 5 and all(len(r) == 5 for r in rec["chars"])


def test_frobenius_examples(capsys):
    code, out, _ = run(capsys, "frobenius", "S4", "--normal", "A4", "-p", "3", "--format", "json")
    assert code == 0
    pairs = {(r["b"], r["B"]): r["verdict_char"] for r in json.loads(out)["primes"][0]["pairs"]}
    assert pairs == {(0, 0): True, (1, 1): False, (1, 2): False}
    code, out, _ = run(capsys, "frobenius", "S4", "--normal", "A4", "-p", "2")
    assert code == 0
    assert "not a Frobenius pair" in out and "witness chi3 of N (degree 3)" in out
    code, out, _ = run(capsys, "frobenius", "A4", "--normal", "K4", "--all-primes")
    assert code == 0 and "(b0, B0): Frobenius pair" in out and "k(B0) = 4 = 3 + (4-1)/3 ok" in out


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "A4", "--suite", "brauer")
    assert code == 0 and out.startswith("PASS brauer") and "fixed" in out
    code, out, _ = run(capsys, "verify", "S4", "--suite", "partition")
    assert code == 0 and "p=2" in out and "p=3" in out
    code, out, _ = run(capsys, "verify", "S4", "--suite", "brauer-counts", "--suite", "covering", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_catalog_all(capsys):
    code, out, _ = run(capsys, "verify", "--catalog", "--suite", "all")
    assert code == 0
    assert "FAIL" not in out
    total = out.strip().splitlines()[-1]
    done, of = total.split()[0].split("/")
    assert done == of


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and ["A4", "K4"] in rec["pairs"]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "blocks", "A4", "--all-primes", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    rec = json.loads(target.read_text())
    assert [x["p"] for x in rec["primes"]] == [2, 3]


def test_generator_file_input(capsys, tmp_path):
    g = tmp_path / "s3.txt"
    g.write_text("degree 3\n2 3 1\n2 1 3\n")
    n = tmp_path / "c3.txt"
    n.write_text("degree 3\n2 3 1\n")
    code, out, _ = run(capsys, "frobenius", str(g), "--normal", str(n), "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["group"] == "s3" and rec["normal_subgroup"] == "c3" and rec["consistent"]


@pytest.mark.parametrize("argv,message", [
    (["blocks", "A4", "-p", "4"], "4 is not prime"),
    (["blocks", "nosuchgroup"], "unknown group"),
    (["frobenius", "S4", "--normal", "nope"], "unknown normal subgroup"),
    (["chartab", "A5", "--cap", "10"], "group too large"),
    (["chartab", "A5", "--cap", "0"], "--cap must be positive"),
    (["verify", "--suite", "all"], "exactly one"),
    (["verify", "A4", "--suite", "bogus"], "unknown suite"),
])
def test_input_errors_exit_2(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert message in err


def test_argparse_errors_exit_2(capsys):
    assert run(capsys, "frobenius", "A4")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_bad_files_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("degree 4\n1 1 3 4\n")
    code, _, err = run(capsys, "chartab", str(bad))
    assert code == 2 and "not a bijection at line 2" in err
    s4 = tmp_path / "s4.txt"
    s4.write_text("degree 4\n2 3 4 1\n2 1 3 4\n")
    notnormal = tmp_path / "h.txt"
    notnormal.write_text("degree 4\n2 1 3 4\n")
    code, _, err = run(capsys, "frobenius", str(s4), "--normal", str(notnormal))
    assert code == 2 and "not normal" in err


def test_prime_not_dividing_warns(capsys):
    code, out, err = run(capsys, "blocks", "A4", "-p", "5")
    assert code == 0 and "does not divide" in err and "p = 5" in out


def test_inconsistency_exits_1_with_full_report(capsys, monkeypatch):
    monkeypatch.setattr(FrobeniusAnalysis, "consistent", property(lambda self: False))
    code, out, _ = run(capsys, "frobenius", "A4", "--normal", "K4", "--format", "json")
    assert code == 1
    rec = json.loads(out)
    assert rec["consistent"] is False and rec["primes"]
    monkeypatch.setattr(cli, "run_suites", lambda *a, **k: [SuiteResult("linkage", "A4", False, ["boom"])])
    code, out, _ = run(capsys, "verify", "A4")
    assert code == 1 and "FAIL linkage" in out and "boom" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "blockforge", "blocks", "S4", "-p", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "blocks_S4_p3.txt").read_text(encoding="utf-8")
