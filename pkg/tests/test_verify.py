"""Verification cases and the report they produce."""

from __future__ import annotations

import json

import pytest

from app.config import Settings
from app.model.errors import UsageError
from app.report.render import render_cases
from app.specialfn import gammafn
from app.verify.cases import default_case_ids
from app.verify.pipeline import run_all, run_case, run_cases
from app.verify.tolerances import TABLE_VERSION, TOLERANCES


@pytest.mark.parametrize("case_id", ["airy", "sho", "sho_shifted", "quartic", "box", "powerlaw:3", "general"])
def test_cases_pass(case_id, settings):
    case = run_case(case_id, settings)
    assert not case.error, case.error
    assert case.passed, [q.to_json_dict() for q in case.failures()]


def test_parametric_ids(settings):
    assert run_case("powerlaw:N=6", settings).id == "powerlaw:6"
    case = run_case("general:sho_shifted", settings)
    assert case.id == "general:sho_shifted"
    assert case.passed
    assert default_case_ids(settings)[-2:] == ["powerlaw:3", "general:powerlaw:N=4"]


def test_powerlaw_case_below_oscillator(settings):
    case = run_case("powerlaw:1", settings)
    names = [q.name for q in case.quantities]
    assert "S1 divergent" in names and "S2 - S1" not in names
    assert case.passed


def test_unknown_case(settings):
    with pytest.raises(UsageError):
        run_case("hexic", settings)
    with pytest.raises(UsageError):
        run_case("powerlaw:abc", settings)
    with pytest.raises(UsageError):
        run_case("general:cubic", settings)


def test_airy_case_reports_printed_values(settings):
    case = run_case("airy", settings)
    by_name = {q.name: q for q in case.quantities}
    assert by_name["S estimate"].expected == pytest.approx(0.72901, abs=1e-5)
    assert by_name["S estimate"].got == pytest.approx(0.7277, abs=2e-4)
    assert len([n for n in by_name if n.startswith("lambda_")]) == 20


def test_gamma_fault_fails_quartic(monkeypatch, settings):
    real = gammafn.gamma
    monkeypatch.setattr(gammafn, "gamma", lambda x: real(x) * (1.0 + 1e-3))
    case = run_case("quartic", settings)
    assert not case.passed
    assert "S closed form" in [q.name for q in case.failures()]


def test_json_is_deterministic(settings):
    a = render_cases([run_case("box", settings)], "json")
    b = render_cases([run_case("box", settings)], "json")
    assert a == b
    payload = json.loads(a)
    assert list(payload) == ["case", "quantities", "pass"]
    assert list(payload["quantities"][0]) == ["name", "expected", "got", "tol", "provenance", "pass"]
    assert payload["pass"] is True


def test_csv_and_table_formats(settings):
    case = run_case("box", settings)
    csv_text = render_cases([case], "csv")
    assert csv_text.splitlines()[0] == "case,name,expected,got,tol,provenance,pass"
    table = render_cases([case], "table")
    assert "box" in table and "expected" in table and "1/1 cases passed" in table
    with pytest.raises(UsageError):
        render_cases([case], "xml")


def test_run_all_writes_report(tmp_path, settings, capsys):
    out = tmp_path / "report.json"
    assert run_all(case="box", out=out, settings=settings) == 0
    assert json.loads(out.read_text())["case"] == "box"
    assert "Wrote verification report" in capsys.readouterr().out


def test_run_all_metadata_envelope(tmp_path, settings):
    out = tmp_path / "report.json"
    run_all(case="box", out=out, settings=settings, metadata=True, quiet=True)
    payload = json.loads(out.read_text())
    assert payload["metadata"]["tolerance_table"] == TABLE_VERSION
    assert payload["cases"][0]["case"] == "box"


def test_run_all_fails_on_fault(monkeypatch, tmp_path, settings, capsys):
    real = gammafn.gamma
    monkeypatch.setattr(gammafn, "gamma", lambda x: real(x) * (1.0 + 1e-3))
    assert run_all(case="quartic", out=tmp_path / "r.csv", fmt="csv", settings=settings, quiet=True) == 1
    assert "FAIL quartic" in capsys.readouterr().err


def test_parallel_run_keeps_order():
    settings = Settings().merged(jobs=2)
    cases = run_cases(["box", "sho"], settings, settings.jobs)
    assert [c.id for c in cases] == ["box", "sho"]
    assert all(c.passed for c in cases)


def test_tolerance_table():
    assert TOLERANCES["quartic.report"] == 5e-4
    assert TOLERANCES["airy.estimate"] == 2e-3
    assert TOLERANCES["box.exact"] == 1e-12


def _raise_value_error(*args, **kwargs):
    raise ValueError("bad input")


def test_foreign_exception_in_a_case_is_recorded(monkeypatch, settings):
    monkeypatch.setattr("app.verify.cases.solve_spectrum", _raise_value_error)
    case = run_case("quartic", settings)
    assert "ValueError" in case.error
    assert not case.passed


def test_foreign_exception_in_a_quantity_is_recorded(monkeypatch, settings):
    monkeypatch.setattr("app.verify.cases.closed_form_S", _raise_value_error)
    case = run_case("quartic", settings)
    failed = {q.name: q for q in case.failures()}
    assert "ValueError" in failed["S closed form"].error
    assert failed["S closed form"].got is None


def test_foreign_exception_outside_the_builder_is_recorded(monkeypatch, settings):
    monkeypatch.setattr("app.verify.pipeline.build_case", _raise_value_error)
    case = run_case("box", settings)
    assert case.id == "box" and case.error == "ValueError: bad input"
    assert not case.passed


def test_provenance_names_the_table_entry(settings):
    case = run_case("quartic", settings)
    by_name = {q.name: q for q in case.quantities}
    assert by_name["lambda_3"].provenance == "x^4 spectrum table, row n = 1, odd column"
    assert by_name["odd partial sum"].provenance.startswith("x^4 spectrum table")
