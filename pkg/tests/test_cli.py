"""Command-line interface: exit codes, report files, byte stability."""

import json
import os

import pytest

import tlcat.cli as cli
from tlcat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_usage_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "bogus")
    assert code == 2
    code, _, _ = run(capsys, "verify", "braid", "--spec", "nonsense:1",
                     "--out", str(tmp_path / "x.json"))
    assert code == 2
    code, _, err = run(capsys, "eigen", "--module", "3", "2")
    assert code == 2
    code, _, _ = run(capsys, "fusion-table", "2", "1", "1", "1")
    assert code == 2
    code, _, _ = run(capsys, "render", "not a diagram")
    assert code == 2


def test_verify_writes_report_and_passes(capsys, tmp_path):
    out = tmp_path / "dilute.json"
    code, stdout, _ = run(capsys, "verify", "dilute", "--max-n", "3",
                          "--out", str(out))
    assert code == 0
    assert "[PASS]" in stdout
    payload = json.loads(out.read_text())
    assert payload["summary"]["ok"] is True
    assert payload["summary"]["fail"] == 0
    assert payload["suites"]


def test_verify_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run(capsys, "verify", "repr", "--max-n", "3",
                         "--seed", "7", "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_failure_exit_code_and_report(capsys, tmp_path, monkeypatch):
    failing = {
        "schema": 1,
        "suite": "braid",
        "summary": {"total": 1, "pass": 0, "fail": 1},
        "cases": [{"identity": "x", "params": {}, "status": "fail"}],
    }
    monkeypatch.setattr(cli, "_run_suite", lambda *a: failing)
    out = tmp_path / "fail.json"
    code, stdout, _ = run(capsys, "verify", "braid", "--out", str(out))
    assert code == 1
    assert "[FAIL]" in stdout
    # report written even on failure
    payload = json.loads(out.read_text())
    assert payload["summary"]["ok"] is False


def test_default_report_location_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TLCAT_REPORT_DIR", str(tmp_path / "reports"))
    code, stdout, _ = run(capsys, "verify", "repr", "--max-n", "2")
    assert code == 0
    assert (tmp_path / "reports" / "verify-repr.json").exists()


def test_fusion_table_generic(capsys):
    code, stdout, _ = run(capsys, "fusion-table", "2", "2", "1", "1")
    assert code == 0
    table = json.loads(stdout)
    assert table["dim"] == 3
    assert sorted(s["k"] for s in table["summands"]) == [1, 3]
    assert all(s["multiplicity"] == 1 for s in table["summands"])
    assert table["routes_agree"] is True
    mu = {s["k"]: s["monodromy_eigenvalue"] for s in table["summands"]}
    assert mu[3] == "s^8"  # q^2


def test_fusion_table_at_root(capsys):
    code, stdout, _ = run(capsys, "fusion-table", "2", "2", "1", "1",
                          "--spec", "root:3")
    assert code == 0
    table = json.loads(stdout)
    assert table["dim"] == 3
    assert table["routes_agree"] is True
    blocks = [j["blocks"] for j in table["jordan"]]
    assert [2, 1] in blocks


def test_eigen(capsys):
    code, stdout, _ = run(capsys, "eigen", "--module", "4", "2")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["central_eigenvalue"]["value"] == "s^16"  # q^4
    assert payload["central_eigenvalue"]["s_exponent"] == 16
    assert payload["module"]["dim"] == 3


def test_render_ascii_and_svg(capsys, tmp_path):
    code, stdout, _ = run(capsys, "render", "2x2:[(1,4),(2,3)]")
    assert code == 0 and "2x2:[(1,4),(2,3)]" in stdout
    out = tmp_path / "pic.svg"
    code, stdout, _ = run(capsys, "render", "2x2:[(1,4),(2,3)]",
                          "--format", "svg", "--out", str(out))
    assert code == 0
    assert out.read_text().startswith("<svg")


def test_verify_jobs_parallel_matches_serial(capsys, tmp_path):
    serial, parallel = tmp_path / "s.json", tmp_path / "p.json"
    code, _, _ = run(capsys, "verify", "repr", "--max-n", "2",
                     "--out", str(serial))
    assert code == 0
    code, _, _ = run(capsys, "verify", "repr", "--max-n", "2", "--jobs", "2",
                     "--out", str(parallel))
    assert code == 0
    assert serial.read_bytes() == parallel.read_bytes()
