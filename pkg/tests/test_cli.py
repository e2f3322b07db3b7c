"""Command-line entry point."""

from __future__ import annotations

import csv
import io
import json

import pytest

from app import __version__
from app.cli import main


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_no_command_prints_help():
    assert main([]) == 2


def test_closed_form(tmp_path):
    out = tmp_path / "cf.json"
    assert main(["closed-form", "--N", "4", "--out", str(out), "--quiet"]) == 0
    payload = json.loads(out.read_text())
    assert payload["S"] == pytest.approx(0.76330, abs=1e-5)
    assert payload["S2"] == pytest.approx(2 * payload["S"], abs=1e-12)
    assert payload["divergent"] == {"S": False, "S1": False, "S2": False}


def test_closed_form_domain_error(capsys):
    assert main(["closed-form", "--N", "-1"]) == 2
    assert "ERROR" in capsys.readouterr().err


def test_spectrum_to_stdout(capsys):
    assert main(["spectrum", "--potential", "box:half_width=1.5707963267948966", "--count", "2", "--quiet"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [r["parity"] for r in rows] == ["even", "even", "odd", "odd"]
    assert float(rows[2]["lambda"]) == pytest.approx(4.0)


def test_bad_potential(capsys):
    assert main(["spectrum", "--potential", "cubic:N=3"]) == 2
    assert "unknown potential" in capsys.readouterr().err


def test_report_with_config(tmp_path):
    cfg = tmp_path / "confsum.cfg"
    cfg.write_text("# quartic\nN = 4\nterms = 4\n")
    out = tmp_path / "report.json"
    assert main(["report", "--config", str(cfg), "--out", str(out), "--quiet"]) == 0
    payload = json.loads(out.read_text())
    assert payload["order"] == 1
    assert payload["S_estimate"] == pytest.approx(0.76327, abs=5e-4)


def test_bad_config_line(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("N = four\n")
    assert main(["closed-form", "--config", str(cfg)]) == 2
    assert "bad.cfg:1" in capsys.readouterr().err


def test_greens_writes_diagonal(tmp_path, capsys):
    out = tmp_path / "diag.csv"
    assert main(["greens", "--potential", "box", "--second-order", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out.split("\n", 1)[1])
    assert summary["second_order_S1"] == pytest.approx(3.14159265358979**4 / 1440, abs=1e-6)
    header = out.read_text().splitlines()[0]
    assert header == "x,g1,g2,difference"


def test_airy_zeros(capsys):
    assert main(["airy-zeros", "--count", "3", "--quiet"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 6
    assert float(rows[0]["zero"]) == pytest.approx(1.01879, abs=5e-6)


def test_verify_single_case(tmp_path):
    out = tmp_path / "box.txt"
    assert main(["verify", "--case", "box", "--format", "table", "--out", str(out), "--quiet"]) == 0
    assert "1/1 cases passed" in out.read_text()


def test_verify_unknown_case(capsys):
    assert main(["verify", "--case", "nope"]) == 2
    assert "unknown case" in capsys.readouterr().err
