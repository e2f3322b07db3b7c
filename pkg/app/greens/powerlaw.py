# app/greens/powerlaw.py

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from ..model.errors import DomainError, QuadratureError
from ..model.params import PowerLawParams
from ..specialfn import bessel_i_scaled, bessel_k_scaled, erfc, erfcx

# argument beyond which K_beta(u)**2 is below double precision relative to the integral
_K_CUTOFF = 40.0


def _reduced(params: PowerLawParams, x: float):
    if not x > 0:
        raise DomainError(f"power-law Green's function needs x > 0, got {x!r}")
    s = params.length_scale
    y = s * x
    return s, y, params.nu * y ** (1.0 / params.nu)


def power_law_greens_diag(params: PowerLawParams, x: float, which: str = "G1") -> float:
    """
    Equal-point Green's functions of -d2/dx2 + gamma x**N.

    G1 = nu x I_beta(z) K_beta(z), G2 = nu x I_-beta(z) K_beta(z), with z = nu x**(1/nu) in units
    where gamma = 1. "diff" gives G2 - G1 = (4 beta / pi) sin(pi beta) x K_beta(z)**2.
    """
    s, y, z = _reduced(params, x)
    b = params.beta
    k = bessel_k_scaled(b, z)
    if which == "G1":
        val = params.nu * y * bessel_i_scaled(b, z) * k
    elif which == "G2":
        val = params.nu * y * bessel_i_scaled(-b, z) * k
    elif which == "diff":
        val = 4.0 * b / math.pi * math.sin(math.pi * b) * y * (k * math.exp(-z)) ** 2
    else:
        raise DomainError(f"unknown Green's function {which!r}")
    return val / s


def power_law_greens(params: PowerLawParams, x: float, y: float, which: str = "G1") -> float:
    """Off-diagonal G1/G2 for x, y > 0."""
    lo, hi = sorted((x, y))
    s, ylo, zlo = _reduced(params, lo)
    _, yhi, zhi = _reduced(params, hi)
    b = params.beta
    order = b if which == "G1" else -b
    if which not in ("G1", "G2"):
        raise DomainError(f"unknown Green's function {which!r}")
    val = params.nu * math.sqrt(ylo * yhi) * bessel_i_scaled(order, zlo) * bessel_k_scaled(b, zhi) * math.exp(zlo - zhi)
    return val / s


def sum_rule_S_by_quadrature(params: PowerLawParams, rel_tol: float = 1e-12) -> float:
    """
    S as the integral of G2 - G1 over the half-line.

    With t = u**(2 beta) the integrand t K_beta(t**(1/(2 beta)))**2 is smooth at the origin.
    """
    b = params.beta
    nu = params.nu

    def f(t: float) -> float:
        u = t ** (1.0 / (2.0 * b))
        if u < 1e-250:
            # small-argument limit of t K_beta(u)**2
            return math.gamma(b) ** 2 * 4.0**b / 4.0
        return t * (bessel_k_scaled(b, u) * math.exp(-u)) ** 2

    t_max = _K_CUTOFF ** (2.0 * b)
    val, err = quad(f, 0.0, t_max, epsabs=0.0, epsrel=rel_tol, limit=200)
    if err > 100.0 * rel_tol * abs(val):
        raise QuadratureError(f"{params.label()}: quadrature for S did not converge", val, err)
    prefactor = 4.0 * b / math.pi * math.sin(math.pi * b) * nu ** (1.0 - 4.0 * b) / (2.0 * b)
    return prefactor * val * params.sum_scale


def erf_identity_integrand(x):
    """sqrt(pi) erfcx(x) erfc(x): twice the equal-point difference G2 - G1 of the shifted oscillator."""
    xa = np.asarray(x, dtype=float)
    out = np.vectorize(lambda t: math.sqrt(math.pi) * erfcx(t) * erfc(t), otypes=[float])(xa)
    return out if out.ndim else float(out)


def erf_integral_identity(rel_tol: float = 1e-12) -> float:
    """Integral of erf_identity_integrand over the half-line; equals ln 2."""
    val, err = quad(erf_identity_integrand, 0.0, np.inf, epsabs=0.0, epsrel=rel_tol, limit=200)
    if err > 100.0 * rel_tol * abs(val):
        raise QuadratureError("erf identity quadrature did not converge", val, err)
    return float(val)
