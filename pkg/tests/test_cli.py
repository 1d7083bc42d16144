"""CLI behavior: output stability, schemas, exit codes."""

import json

import pytest

from weylchar.cli import GUARD, MISMATCH, OK, USAGE, run


def lines(argv):
    return run(argv).lines


def test_dim():
    result = run(["dim", "--type", "E6", "--weight", "1,0,0,0,0,1"])
    assert result.status == OK
    assert result.lines == ("650",)


def test_dominant():
    result = run(["dominant", "--type", "E6", "--weight", "1,-1,1,3,-1,2"])
    assert result.status == OK
    assert "sign +1" in result.lines[0]


def test_roots_counts():
    result = run(["roots", "--type", "E7"])
    assert result.status == OK
    assert "63 positive roots" in result.lines[0]
    assert "|W| = 2903040" in result.lines[0]


def test_tensor_text_sorted():
    out = lines(["tensor", "--type", "E6", "--left", "1,0,0,0,0,0", "--right", "0,0,0,0,0,1"])
    assert out == ("1 x [0,0,0,0,0,0]", "1 x [0,1,0,0,0,0]", "1 x [1,0,0,0,0,1]")


def test_tensor_json_schema_and_roundtrip():
    result = run(["--format", "json", "tensor", "--type", "E6",
                  "--left", "1,0,0,0,0,1", "--right", "2,0,0,0,0,2"])
    payload = json.loads(result.lines[0])
    assert payload == result.payload
    assert payload["system"] == {"series": "E", "rank": 6}
    assert {"weight": [2, 0, 0, 0, 0, 2], "mult": 3} in payload["components"]
    assert len(payload["components"]) == 29
    weights = [tuple(c["weight"]) for c in payload["components"]]
    assert weights == sorted(weights)


def test_byte_identical_reruns():
    argv = ["--format", "json", "kspectrum", "--module", "E6_L_mu", "--max-level", "4"]
    assert run(argv).lines == run(argv).lines
    argv = ["report", "--module", "E7_pi1", "--max-level", "5", "--group", "2,3,4,5"]
    assert run(argv).lines == run(argv).lines


def test_kspectrum_levels_schema():
    result = run(["--format", "json", "kspectrum", "--module", "E7_pi2", "--max-level", "2"])
    payload = result.payload
    assert [lvl["level"] for lvl in payload["levels"]] == [0, 1, 2]
    assert payload["levels"][0]["ktypes"] == [
        {"ss": [0, 0, 0, 0, 0, 0], "central": -24, "mult": 1}]
    assert payload["levels"][2]["central"] == -28


def test_rule_command():
    out = lines(["rule", "--id", "Lem3.4", "--params", "a=2,f=0"])
    assert out == ("1 x [1,0,0,0,0,1]", "1 x [1,0,1,0,0,0]", "1 x [3,0,0,0,0,0]")


def test_schmid_command():
    out = lines(["schmid", "--pair", "EIII", "--max-level", "1"])
    assert out[0].startswith("[0,0,0,0,0,0]")
    assert out[1].startswith("[0,1,0,0,0,-3]")


def test_verify_spectra_pass():
    result = run(["verify", "--suite", "spectra", "--module", "E6_wallach", "--max-level", "5"])
    assert result.status == OK
    assert result.lines[-1] == "PASS"


def test_verify_oracle_pass():
    result = run(["verify", "--suite", "oracle", "--systems", "A2,D4",
                  "--count", "4", "--seed", "11", "--bound", "2"])
    assert result.status == OK


def test_verify_schmid_pass():
    result = run(["verify", "--suite", "schmid", "--max-level", "5"])
    assert result.status == OK


def test_usage_errors_exit_2():
    assert run(["tensor", "--type", "E6", "--left", "1,0", "--right", "0,1"]).status == USAGE
    assert run(["dim", "--type", "Q9", "--weight", "1"]).status == USAGE
    assert run(["nonsense"]).status == USAGE
    assert run(["rule", "--id", "Lem3.4", "--params", "a=1"]).status == USAGE


def test_guard_exit_3(monkeypatch):
    monkeypatch.setenv("WEYLCHAR_ORACLE_GUARD", "10")
    result = run(["tensor", "--type", "A2", "--left", "1,1", "--right", "1,1", "--oracle"])
    assert result.status == GUARD


def test_verification_mismatch_exit_1(tmp_path):
    # corrupt one rule multiplicity in an overridden table: the suite must
    # report FAIL and exit 1, not crash
    from importlib import resources

    payload = json.loads(resources.files("weylchar").joinpath("data/rules.json").read_text())
    rec = next(r for r in payload["rules"] if r["id"] == "Cor3.3a")
    rec["shifts"][0]["nu"] = [0, 0, 0, 0, 1]
    bad = tmp_path / "rules.json"
    bad.write_text(json.dumps(payload))
    result = run(["verify", "--suite", "rules", "--rule", "Cor3.3a",
                  "--grid", "a=1..2,d=1..2", "--rules-file", str(bad)])
    assert result.status == MISMATCH
    assert result.lines[-1] == "FAIL"


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "weylchar.cli", "dim", "--type", "D5", "--weight", "0,0,0,3,0"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "672"
