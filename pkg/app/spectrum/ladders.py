# app/spectrum/ladders.py

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import quad
from scipy.optimize import brentq

from ..model.errors import SolverError
from ..model.potentials import PotentialKind, PotentialSpec
from ..powerlaw.wkb import wkb_eigenvalue


@dataclass(frozen=True)
class Ladder:
    """
    Eigenvalue as a function of the merged quantum number m (even states m = 2n, odd m = 2n + 1).

    `exact` ladders reproduce the spectrum; the others are semiclassical.
    """

    name: str
    fn: Callable[[float], float]
    exact: bool
    # large-m growth exponent of lambda_m
    growth: float

    def eigenvalue(self, m: float) -> float:
        return self.fn(m)


def _bohr_sommerfeld(spec: PotentialSpec) -> Callable[[float], float]:
    def action(lam: float) -> float:
        x_t = spec.turning_point(lam)
        if x_t <= 0.0:
            return 0.0
        val, _ = quad(lambda t: math.sqrt(max(lam - float(spec.value(t)), 0.0)), 0.0, x_t, limit=200)
        return float(val)

    floor = spec.minimum(max(spec.turning_point(float(spec.value(0.0)) + 1.0), 1.0))

    def eigenvalue(m: float) -> float:
        # integral of sqrt(lam - V) over [0, x_t] = (m + 1/2) pi / 2
        target = (m + 0.5) * math.pi / 2.0
        lo = floor
        hi = max(floor + 1.0, 2.0 * abs(floor) + 1.0)
        while action(hi) < target:
            hi = floor + 2.0 * (hi - floor)
            if hi > 1e12:
                raise SolverError(f"{spec.label}: Bohr-Sommerfeld root for m={m} not bracketed")
        return float(brentq(lambda lam: action(lam) - target, lo, hi, xtol=1e-12, rtol=1e-12))

    return eigenvalue


def ladder_for(spec: PotentialSpec) -> Ladder:
    kind = spec.kind
    if kind is PotentialKind.BOX:
        k = math.pi / (2.0 * float(spec.half_width))
        return Ladder("box", lambda m: (k * (m + 1.0)) ** 2, exact=True, growth=2.0)
    if kind is PotentialKind.SHIFTED_OSCILLATOR:
        return Ladder("shifted oscillator", lambda m: 2.0 * m + 2.0, exact=True, growth=1.0)
    if kind is PotentialKind.POWER_LAW:
        params = spec.power_law_params()
        if params.N == 2.0:
            root = math.sqrt(params.gamma_strength)
            return Ladder("oscillator", lambda m: root * (2.0 * m + 1.0), exact=True, growth=1.0)
        return Ladder("wkb", lambda m: wkb_eigenvalue(params, m), exact=False, growth=params.wkb_exponent)
    s = spec.asymptotic_exponent
    return Ladder("bohr-sommerfeld", _bohr_sommerfeld(spec), exact=False, growth=2.0 * s / (s + 2.0))
