from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..config import Settings
from ..greens import build_zero_energy_solutions, general_sum_rules, greens_diagonal, second_order_sum
from ..io.csvio import csv_text, emit
from ..model.errors import DivergentSumError
from ..model.potentials import Parity, PotentialSpec
from ..model.solutions import GreensDiagonal
from ..model.spectra import Spectrum
from ..model.tables import AiryZeroTable
from ..powerlaw import closed_form_sums, derive_params, wkb_constant
from ..specialfn import airy_zero_table
from ..spectrum import assemble_report, check_interlacing, solve_spectrum
from .render import to_json

logger = logging.getLogger(__name__)


def _finish(text: str, out: Optional[Path], what: str, quiet: bool) -> int:
    emit(text, out)
    if out is not None:
        if not out.exists() or out.stat().st_size == 0:
            print(f"ERROR: {what} was not written or is empty", file=sys.stderr)
            return 2
        if not quiet:
            print(f"Wrote {what}: {out} ({out.stat().st_size} bytes)")
    return 0


def run_closed_form(*, N: float, gamma: float = 1.0, out: Optional[Path] = None, quiet: bool = False) -> int:
    params = derive_params(N, gamma)
    sums = closed_form_sums(params)
    payload: Dict[str, Any] = {
        "potential": params.label(),
        "N": params.N,
        "gamma": params.gamma_strength,
        "nu": params.nu,
        "beta": params.beta,
        "wkb_constant": wkb_constant(params.N),
        **sums.as_dict(),
    }
    return _finish(to_json(payload), out, "closed-form sums", quiet)


def run_spectrum(
    *,
    spec: PotentialSpec,
    parity: str,
    count: int,
    settings: Settings,
    out: Optional[Path] = None,
    quiet: bool = False,
) -> int:
    parities = [Parity.EVEN, Parity.ODD] if parity == "both" else [Parity(parity)]
    spectra: List[Spectrum] = [solve_spectrum(spec, p, count, settings) for p in parities]
    if len(spectra) == 2 and not check_interlacing(spectra[0].eigenvalues, spectra[1].eigenvalues):
        logger.warning("%s: even and odd ladders do not interlace", spec.label)
    rows: List[dict] = []
    for s in spectra:
        rows.extend(s.rows())
    return _finish(csv_text(rows, Spectrum.csv_header()), out, "spectrum", quiet)


def run_sum_report(
    *,
    spec: PotentialSpec,
    terms: int,
    order: int,
    settings: Settings,
    out: Optional[Path] = None,
    quiet: bool = False,
) -> int:
    report = assemble_report(spec, terms, order, settings)
    logger.info("%s: S estimate %.10g by %s", spec.label, report.S_estimate, report.method)
    return _finish(to_json(report.to_json_dict()), out, "sum-rule report", quiet)


def run_greens(
    *,
    spec: PotentialSpec,
    settings: Settings,
    second_order: bool = False,
    out: Optional[Path] = None,
    quiet: bool = False,
) -> int:
    basis = build_zero_energy_solutions(spec, settings)
    sums = general_sum_rules(spec, settings, basis)
    summary: Dict[str, Any] = {"potential": spec.label, **sums.as_dict()}
    if second_order:
        for parity, key in ((Parity.ODD, "second_order_S1"), (Parity.EVEN, "second_order_S2")):
            try:
                summary[key] = second_order_sum(spec, parity, settings, basis)
            except DivergentSumError as e:
                logger.warning("%s", e)
                summary[key] = None
    diag = greens_diagonal(basis)
    rc = _finish(csv_text(diag.rows(), GreensDiagonal.csv_header()), out, "Green's function diagonal", quiet)
    if not quiet:
        # stdout carries the CSV unless --out was given
        print(to_json(summary), end="", file=sys.stdout if out is not None else sys.stderr)
    return rc


def run_airy_zeros(*, count: int, out: Optional[Path] = None, quiet: bool = False) -> int:
    table = airy_zero_table(count)
    if not table.is_interlaced():
        logger.warning("Airy zeros are not interlaced; Newton iteration converged to a wrong root")
    return _finish(csv_text(table.rows(), AiryZeroTable.csv_header()), out, "Airy zeros", quiet)
