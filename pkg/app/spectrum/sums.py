# app/spectrum/sums.py

from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence

from scipy.integrate import quad

from ..config import Settings
from ..model.errors import DivergentSumError, DomainError, QuadratureError
from ..model.params import PowerLawParams
from ..model.potentials import Parity, PotentialKind, PotentialSpec
from ..model.spectra import Spectrum, SumRuleReport
from ..powerlaw import closed_forms
from ..powerlaw.wkb import ladder_tail, wkb_difference_tail
from .ladders import ladder_for
from .shooting import merge_ladders, solve_spectrum

logger = logging.getLogger(__name__)

# partial sums averaged by the acceleration
_ACCEL_WINDOW = 24


def partial_inverse_sum(spec_eigenvalues: Spectrum | Sequence[float], p: int = 1) -> float:
    """Sum of lambda_n^-p over the stored eigenvalues."""
    values = spec_eigenvalues.eigenvalues if isinstance(spec_eigenvalues, Spectrum) else list(spec_eigenvalues)
    if not values:
        raise DomainError("partial_inverse_sum of an empty spectrum")
    if p < 1:
        raise DomainError(f"order must be >= 1, got {p}")
    return math.fsum(lam ** (-p) for lam in values)


def wkb_tail(params: PowerLawParams, k: int, parity: Parity, p: int = 1) -> float:
    """Integral from k + 1/2 of the WKB ladder's lambda^-p for one parity."""
    return ladder_tail(params, k, Parity(parity), p)


def _quad_tail(fn, lower: float, rel_tol: float, what: str) -> float:
    val, err = quad(fn, lower, math.inf, epsabs=0.0, epsrel=rel_tol, limit=400)
    if not math.isfinite(val) or err > 1e3 * rel_tol * max(abs(val), 1e-300) + 1e-14:
        raise QuadratureError(f"{what} did not converge", float(val), float(err))
    return float(val)


def spec_tail(spec: PotentialSpec, k: int, parity: Parity, p: int = 1, settings: Optional[Settings] = None) -> float:
    """Ladder tail for any potential: closed form for power laws, quadrature over the ladder otherwise."""
    parity = Parity(parity)
    if spec.is_power_law:
        return wkb_tail(spec.power_law_params(), k, parity, p)
    ladder = ladder_for(spec)
    if ladder.growth * p <= 1.0:
        raise DivergentSumError(
            "S2" if parity is Parity.EVEN else "S1",
            f"ladder grows as m^{ladder.growth:.4g}; summand exponent {ladder.growth * p:.4g} <= 1",
        )
    tol = (settings or Settings()).quad_rel_tol
    off = parity.offset
    return _quad_tail(lambda n: ladder.eigenvalue(2.0 * n + off) ** (-p), k + 0.5, tol, f"{parity.value} ladder tail")


def spec_difference_tail(spec: PotentialSpec, k: int, p: int = 1, settings: Optional[Settings] = None) -> float:
    """Tail of the alternating difference from k + 1/2; convergent for every confining potential."""
    if spec.is_power_law:
        return wkb_difference_tail(spec.power_law_params(), k, p)
    ladder = ladder_for(spec)
    tol = (settings or Settings()).quad_rel_tol
    return _quad_tail(
        lambda n: ladder.eigenvalue(2.0 * n) ** (-p) - ladder.eigenvalue(2.0 * n + 1.0) ** (-p),
        k + 0.5,
        tol,
        "difference tail",
    )


def alternating_sum_accelerated(terms: Sequence[float]) -> float:
    """
    sum (-1)^n terms[n] by repeated pairwise averaging of the last partial sums.

    Each averaging pass cancels the leading oscillation of the partial sums.
    """
    if not terms:
        raise DomainError("no terms to sum")
    partial: List[float] = []
    acc = 0.0
    for n, t in enumerate(terms):
        acc += t if n % 2 == 0 else -t
        partial.append(acc)
    window = partial[-_ACCEL_WINDOW:]
    while len(window) > 1:
        window = [0.5 * (a + b) for a, b in zip(window, window[1:])]
    return window[0]


def closed_form_reference(spec: PotentialSpec, p: int) -> Optional[float]:
    if spec.is_power_law and p == 1:
        return closed_forms.closed_form_S(spec.power_law_params())
    if spec.kind is PotentialKind.SHIFTED_OSCILLATOR and p == 1:
        return 0.5 * math.log(2.0)
    if spec.kind is PotentialKind.BOX:
        return closed_forms.box_sums(float(spec.half_width), p).S
    return None


def _ladders(spec: PotentialSpec, k: int, settings: Settings) -> tuple:
    """n = 0..k of each parity from solve_spectrum (analytic only for the box)."""
    even = solve_spectrum(spec, Parity.EVEN, k + 1, settings).eigenvalues
    odd = solve_spectrum(spec, Parity.ODD, k + 1, settings).eigenvalues
    return even, odd


def assemble_report(spec: PotentialSpec, k: int, p: int = 1, settings: Optional[Settings] = None) -> SumRuleReport:
    """
    Partial sums over n = 0..k of each ladder plus tails from k + 1/2.

    When a ladder tail diverges the alternating sum is estimated instead from the
    difference tail, or by acceleration of the shooting spectrum when the ladder is exact.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if p < 1:
        raise DomainError(f"order must be >= 1, got {p}")
    settings = settings or Settings()
    ladder = ladder_for(spec)
    even, odd = _ladders(spec, k, settings)

    partial_s2 = partial_inverse_sum(even, p)
    partial_s1 = partial_inverse_sum(odd, p)
    tails = {}
    for parity in (Parity.EVEN, Parity.ODD):
        try:
            tails[parity] = spec_tail(spec, k, parity, p, settings)
        except DivergentSumError as exc:
            logger.info("%s: %s", spec.label, exc)
            tails[parity] = None

    tail_s2, tail_s1 = tails[Parity.EVEN], tails[Parity.ODD]
    if tail_s1 is not None and tail_s2 is not None:
        estimate = (partial_s2 + tail_s2) - (partial_s1 + tail_s1)
        method = "ladder tails"
    elif ladder.exact:
        estimate = alternating_sum_accelerated([lam ** (-p) for lam in merge_ladders(even, odd)])
        method = "accelerated alternating sum"
    else:
        estimate = partial_s2 - partial_s1 + spec_difference_tail(spec, k, p, settings)
        method = "difference tail"

    ref = closed_form_reference(spec, p)
    return SumRuleReport(
        order=p,
        partial_S1=partial_s1,
        partial_S2=partial_s2,
        tail_S1=tail_s1,
        tail_S2=tail_s2,
        S_estimate=estimate,
        closed_form_ref=ref,
        abs_error=None if ref is None else abs(estimate - ref),
        terms=k,
        potential=spec.label,
        method=method,
    )
