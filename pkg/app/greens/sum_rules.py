# app/greens/sum_rules.py

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from scipy.integrate import cumulative_simpson, quad, simpson

from ..config import Settings
from ..model.errors import DivergentSumError, QuadratureError
from ..model.potentials import Parity, PotentialKind, PotentialSpec
from ..model.solutions import GreensDiagonal, SumRuleIntegrals, ZeroEnergySolution
from ..powerlaw import box_sums, closed_form_S1, closed_form_S2
from ..spectrum import assemble_report, closed_form_reference
from .zero_energy import build_zero_energy_solutions

logger = logging.getLogger(__name__)

Basis = Tuple[ZeroEnergySolution, ZeroEnergySolution, ZeroEnergySolution]

# V must grow faster than x**(2/3) for the second-order integrals
_SECOND_ORDER_EDGE = 2.0 / 3.0
_EDGE_SLACK = 1e-9
# the running integral is tested for log x growth over this decade, in units of the grid end
_GROWTH_DECADE = (1e12, 1e13)
_GROWTH_POINTS = 11
LOG_GROWTH_LIMIT = 1e-3


def _log_derivatives(spec: PotentialSpec, x: float) -> Tuple[float, float, float]:
    """(p, p'/p, p''/p) for p = sqrt(V), formed from V so nothing overflows at large x."""
    v, d1, d2 = (float(a) for a in spec.derivatives(x))
    q = d1 / v
    return math.sqrt(v), 0.5 * q, 0.5 * d2 / v - 0.25 * q * q


def diagonal_tail_density(spec: PotentialSpec, x: float) -> float:
    """Large-x form of the equal-point Green's functions."""
    p, r1, r2 = _log_derivatives(spec, x)
    if not math.isfinite(p):
        return 0.0
    return 0.5 / p * (1.0 + (3.0 * r1 * r1 / 8.0 - r2 / 4.0) / p / p)


def second_order_tail_density(spec: PotentialSpec, x: float) -> float:
    p, r1, _ = _log_derivatives(spec, x)
    if not math.isfinite(p):
        return 0.0
    return 0.25 / p / p / p * (1.0 + r1 / p)
def _tail(spec: PotentialSpec, density: Callable[[PotentialSpec, float], float], x0: float, rel_tol: float) -> float:
    val, err = quad(lambda t: density(spec, t), x0, np.inf, epsabs=0.0, epsrel=rel_tol, limit=200)
    if err > 1e3 * rel_tol * abs(val) + 1e-15:
        raise QuadratureError(f"{spec.label}: asymptotic tail from x={x0:g} did not converge", val, err)
    return float(val)


def _simpson(y: np.ndarray, x: np.ndarray) -> Tuple[float, float]:
    """Composite Simpson value and a Richardson error estimate from the half-density grid."""
    fine = float(simpson(y, x=x))
    coarse = float(simpson(y[::2], x=x[::2]))
    return fine, abs(fine - coarse) / 15.0


def _decay_exponent(x: np.ndarray, y: np.ndarray) -> float:
    start = int(0.75 * len(x))
    xs, ys = x[start:], np.abs(y[start:])
    keep = (xs > 0) & (ys > 0)
    if keep.sum() < 4:
        return math.nan
    slope = np.polyfit(np.log(xs[keep]), np.log(ys[keep]), 1)[0]
    return float(-slope)


def greens_diagonal(basis: Basis) -> GreensDiagonal:
    xi1, xi2, phi2 = basis
    c = float(phi2.decay_coefficient)
    g1 = xi2.values * phi2.values
    g2 = -xi1.values * phi2.values / c
    # G2 - G1 = -Phi2**2 / c on the diagonal; positive with no cancellation at large x
    return GreensDiagonal(grid=phi2.grid, g1_diag=g1, g2_diag=g2, difference=-(phi2.values**2) / c)


def _log_weighted_density(t: float, spec: PotentialSpec) -> float:
    x = math.exp(t)
    return x * diagonal_tail_density(spec, x)


def log_growth_coefficient(spec: PotentialSpec, x: np.ndarray, y: np.ndarray, rel_tol: float = 1e-10) -> float:
    """
    Coefficient b of a + b*log(x) fitted to the running integral of a diagonal integrand.

    The running integral is the cumulative Simpson integral on the grid, continued past the
    grid end with the asymptotic density; the fit runs over a decade far beyond the grid.
    A convergent integral gives b ~ 0, a 1/x integrand gives its coefficient.
    """
    running = cumulative_simpson(y, x=x, initial=0.0)
    t_end = math.log(float(x[-1]))
    ts = np.linspace(t_end + math.log(_GROWTH_DECADE[0]), t_end + math.log(_GROWTH_DECADE[1]), _GROWTH_POINTS)
    level = float(running[-1])
    levels = []
    for a, b in zip(np.concatenate(([t_end], ts[:-1])), ts):
        piece, _ = quad(_log_weighted_density, float(a), float(b), args=(spec,), epsrel=rel_tol, limit=200)
        level += piece
        levels.append(level)
    return float(np.polyfit(ts, np.asarray(levels), 1)[0])


def general_sum_rules(
    spec: PotentialSpec,
    settings: Optional[Settings] = None,
    basis: Optional[Basis] = None,
) -> SumRuleIntegrals:
    """
    S1, S2 and S as integrals of the equal-point Green's functions.

    S1 and S2 are reported as None (divergent) when their running integral keeps growing
    like log x; S = S2 - S1 always converges for confining potentials.
    """
    settings = settings or Settings()
    basis = basis or build_zero_energy_solutions(spec, settings)
    _, _, phi2 = basis
    c = float(phi2.decay_coefficient)
    diag = greens_diagonal(basis)
    x = diag.grid

    errors: Dict[str, float] = {}
    divergent: Dict[str, bool] = {}
    exponents: Dict[str, float] = {}
    growth: Dict[str, float] = {}
    values: Dict[str, Optional[float]] = {}

    for name, y in (("S1", diag.g1_diag), ("S2", diag.g2_diag)):
        exponents[name] = _decay_exponent(x, y)
        growth[name] = 0.0 if phi2.hard_wall else log_growth_coefficient(spec, x, y, settings.quad_rel_tol)
        divergent[name] = growth[name] > LOG_GROWTH_LIMIT
        if divergent[name]:
            logger.info("%s: %s running integral grows as %.3g log x", spec.label, name, growth[name])
            values[name] = None
            continue
        body, err = _simpson(y, x)
        tail = 0.0 if phi2.hard_wall else _tail(spec, diagonal_tail_density, phi2.x_max, settings.quad_rel_tol)
        values[name] = body + tail
        errors[name] = err

    # Phi2**2 decays like exp(-2 * action) beyond the grid
    s_body, s_err = _simpson(diag.difference, x)
    divergent["S"] = False
    errors["S"] = s_err
    exponents["S"] = _decay_exponent(x, diag.difference)

    if values["S1"] is not None and values["S2"] is not None:
        gap = abs(values["S2"] - values["S1"] - s_body)
        errors["consistency"] = gap
        bound = errors["S1"] + errors["S2"] + s_err
        if gap > 10.0 * bound + 1e-9:
            logger.warning("%s: |S2 - S1 - S| = %.3e exceeds the quadrature error %.3e", spec.label, gap, bound)

    return SumRuleIntegrals(
        S1=values["S1"],
        S2=values["S2"],
        S=s_body,
        c=c,
        errors=errors,
        divergent=divergent,
        decay_exponents=exponents,
        log_growth=growth,
    )


def second_order_sum(
    spec: PotentialSpec,
    parity: Parity,
    settings: Optional[Settings] = None,
    basis: Optional[Basis] = None,
) -> float:
    """
    Sum of 1/lambda**2 over one parity ladder, from the iterated resolvent.

    Uses the trace of G**2 = 2 * int_0^inf v(x)**2 int_0^x u(y)**2 dy dx / W**2, where u is the
    solution regular at the origin for this parity and v = Phi2.
    """
    settings = settings or Settings()
    if spec.asymptotic_exponent <= _SECOND_ORDER_EDGE + _EDGE_SLACK:
        raise DivergentSumError(f"second-order {parity.value} sum", "V must grow faster than x**(2/3)")
    basis = basis or build_zero_energy_solutions(spec, settings)
    xi1, xi2, phi2 = basis
    if parity is Parity.ODD:
        u, w = xi2, -1.0
    else:
        u, w = xi1, float(phi2.decay_coefficient)
    integrand = 2.0 * phi2.values**2 * u.running_norm / (w * w)
    body, err = _simpson(integrand, phi2.grid)
    tail = 0.0 if phi2.hard_wall else _tail(spec, second_order_tail_density, phi2.x_max, settings.quad_rel_tol)
    logger.debug("%s: second-order %s body=%.12g tail=%.3e err=%.1e", spec.label, parity.value, body, tail, err)
    return body + tail


def _one_sided_slope(y: np.ndarray, h: float) -> float:
    return float((-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h))


def reference_sums(spec: PotentialSpec, settings: Optional[Settings] = None) -> Dict[str, Optional[float]]:
    """
    S, S1 and S2 obtained without the Green's function.

    Closed forms for power laws, the box and the shifted oscillator; partial sums of the
    shooting spectrum plus ladder tails otherwise. Divergent entries are None.
    """
    settings = settings or Settings()
    if spec.kind is PotentialKind.BOX:
        box = box_sums(float(spec.half_width))
        return {"S": box.S, "S1": box.S1, "S2": box.S2}
    if spec.is_power_law:
        params = spec.power_law_params()
        out: Dict[str, Optional[float]] = {"S": closed_form_reference(spec, 1)}
        for name, fn in (("S1", closed_form_S1), ("S2", closed_form_S2)):
            try:
                out[name] = fn(params)
            except DivergentSumError:
                out[name] = None
        return out
    exact = closed_form_reference(spec, 1)
    if exact is not None:
        return {"S": exact, "S1": None, "S2": None}
    report = assemble_report(spec, settings.terms, 1, settings)
    return {
        "S": report.S_estimate,
        "S1": None if report.tail_S1 is None else report.partial_S1 + report.tail_S1,
        "S2": None if report.tail_S2 is None else report.partial_S2 + report.tail_S2,
    }


def compact_form_check(
    spec: PotentialSpec,
    settings: Optional[Settings] = None,
    basis: Optional[Basis] = None,
    reference: Optional[Dict[str, Optional[float]]] = None,
) -> Dict[str, float]:
    """
    Residuals |f''(0) - f(0)/Delta| for the three compact sum-rule forms.

    f is the antiderivative of the diagonal integrand vanishing at infinity, so f(0) is minus
    the integral of the numerical diagonal and f''(0) is a one-sided finite difference of the
    integrand. Delta comes from `reference` (default: reference_sums). Pairs that diverge on
    either side are left out.
    """
    settings = settings or Settings()
    basis = basis or build_zero_energy_solutions(spec, settings)
    reference = reference if reference is not None else reference_sums(spec, settings)
    xi1, xi2, phi2 = basis
    sums = general_sum_rules(spec, settings, basis)
    c = sums.c
    h = float(phi2.grid[1] - phi2.grid[0])

    # (name, integrand, f(0), Delta as a multiple of the reference sum)
    pairs = [("S", phi2.values**2, c * sums.S, 0.5)]
    if sums.S1 is not None:
        pairs.append(("S1", xi2.values * phi2.values, -sums.S1, -1.0))
    if sums.S2 is not None:
        pairs.append(("S2", xi1.values * phi2.values, c * sums.S2, 1.0))

    residuals: Dict[str, float] = {}
    for name, y, f0, factor in pairs:
        ref = reference.get(name)
        if ref is None:
            continue
        residuals[name] = abs(_one_sided_slope(y, h) - f0 / (factor * ref))
    return residuals
