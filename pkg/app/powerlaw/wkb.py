# app/powerlaw/wkb.py

from __future__ import annotations

import math

from ..model.errors import DivergentSumError, DomainError
from ..model.params import PowerLawParams
from ..model.potentials import Parity
from ..specialfn import gammafn


def wkb_constant(N: float) -> float:
    """C(N) in lambda_m = (C (m + 1/2))^(2N/(N+2)); C(2) = 2, C(1) = 3 pi / 4."""
    if not N > 0:
        raise DomainError(f"N must be positive, got {N!r}")
    return math.sqrt(math.pi) * (N + 2.0) * gammafn.gamma((N + 2.0) / (2.0 * N)) / (2.0 * gammafn.gamma(1.0 / N))


def wkb_eigenvalue(params: PowerLawParams, n: float) -> float:
    """Bohr-Sommerfeld eigenvalue for merged quantum number n (continuous n allowed)."""
    if n < 0:
        raise DomainError(f"quantum number must be >= 0, got {n!r}")
    q = params.wkb_exponent
    return params.gamma_strength ** params.nu * (wkb_constant(params.N) * (n + 0.5)) ** q


def ladder_offset(parity: Parity) -> float:
    # m = 2n (+1 for odd) turns m + 1/2 into 2(n + 1/4) or 2(n + 3/4)
    return 0.25 if parity is Parity.EVEN else 0.75


def ladder_tail(params: PowerLawParams, k: int, parity: Parity, p: int = 1) -> float:
    """
    Integral over n from k + 1/2 to infinity of lambda(2n + parity)^(-p) on the WKB ladder.

    Exact terms n = 0..k are summed separately.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if p < 1:
        raise DomainError(f"order must be >= 1, got {p}")
    qp = params.wkb_exponent * p
    if qp <= 1.0:
        raise DivergentSumError(
            "S2" if parity is Parity.EVEN else "S1",
            f"WKB summand decays as n^-{qp:.4g}, exponent 2Np/(N+2) <= 1",
        )
    two_c = 2.0 * wkb_constant(params.N)
    lower = k + 0.5 + ladder_offset(parity)
    scale = params.gamma_strength ** (-params.nu * p)
    return scale * two_c ** (-qp) * lower ** (1.0 - qp) / (qp - 1.0)


def wkb_difference_tail(params: PowerLawParams, k: float, p: int = 1, leading_order: bool = False) -> float:
    """
    Tail of the alternating sum, integral from k + 1/2 of lambda_even^-p - lambda_odd^-p.

    Converges for every N > 0. `leading_order` keeps only the first term of the large-n
    expansion of the difference, (1/2)(2 C n0)^(-qp) with n0 = k + 1/2.
    """
    if p < 1:
        raise DomainError(f"order must be >= 1, got {p}")
    qp = params.wkb_exponent * p
    two_c = 2.0 * wkb_constant(params.N)
    scale = params.gamma_strength ** (-params.nu * p)
    n0 = k + 0.5
    if leading_order:
        return scale * 0.5 * (two_c * n0) ** (-qp)
    even, odd = n0 + 0.25, n0 + 0.75
    if abs(qp - 1.0) < 1e-12:
        return scale * math.log(odd / even) / two_c
    return scale * two_c ** (-qp) * (even ** (1.0 - qp) - odd ** (1.0 - qp)) / (qp - 1.0)
