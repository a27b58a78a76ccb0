"""End-to-end driver checks: exit codes, fixture comparison, determinism."""

import json
import shutil
from pathlib import Path

import pytest

from cmsweep.cli import SUBCOMMANDS, main

FIXDIR = Path(__file__).resolve().parents[1] / "src" / "cmsweep" / "fixtures"


def test_verify_all_passes(capsys):
    assert main(["verify-all"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_single_sweep_json_output(capsys):
    assert main(["sweep-dim1", "--format", "json"]) == 0
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["summary"] == {"passed": 12, "failed": 0}
    cases = report["sections"][0]["cases"]
    assert len(cases) == 12
    assert all(r["verdict"] == "REJECTED_DIVISOR_TEST" for r in cases)


def test_determinism(capsys):
    assert main(["sweep-klein4", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["sweep-klein4", "--format", "json"]) == 0
    assert capsys.readouterr().out == first


def test_markdown_rendering(capsys):
    assert main(["gross-periods", "--format", "markdown"]) == 0
    out = capsys.readouterr().out
    assert "|" in out and "case" in out.lower()


def test_tampered_fixture_fails(tmp_path, capsys):
    for f in FIXDIR.glob("*.json"):
        shutil.copy(f, tmp_path / f.name)
    data = json.loads((tmp_path / "sweep-dim1.json").read_text())
    data[0]["verdict"] = "SURVIVES_D4"
    (tmp_path / "sweep-dim1.json").write_text(json.dumps(data))
    assert main(["sweep-dim1", "--fixtures", str(tmp_path)]) == 1
    capsys.readouterr()


def test_missing_fixture_fails(tmp_path, capsys):
    assert main(["sweep-dim1", "--fixtures", str(tmp_path)]) == 1
    capsys.readouterr()


def test_usage_error(capsys):
    assert main(["no-such-subcommand"]) == 2
    capsys.readouterr()


def test_parameter_override_skips_fixture(capsys):
    # overriding the case parameters produces a report without comparing
    # against the blessed fixture
    assert main(["gross-periods", "-p", "2", "-n", "6"]) == 0
    out = capsys.readouterr().out
    assert "TRDEG" in out


def test_all_subcommands_listed():
    assert set(SUBCOMMANDS) == {
        "sweep-dim1", "sweep-order4", "sweep-klein4", "sweep-a4",
        "d4-cmtypes", "rep-classify", "antiweil-verify", "positivity",
        "gross-periods", "verify-all"}
