# app/specialfn/airy.py

from __future__ import annotations

import logging
import math
from typing import Tuple

from ..model.errors import DomainError, SolverError
from ..model.tables import AiryZeroTable
from .bessel import bessel_k

logger = logging.getLogger(__name__)

# Ai(0) and -Ai'(0)
_C1 = 0.355028053887817239260
_C2 = 0.258819403792806798405

# Maclaurin series on [_SERIES_LO, _SERIES_HI]; largest term at -7 is ~1.5e4
_SERIES_LO = -7.0
_SERIES_HI = 2.0
_X_LIMIT = 100.0

_NEWTON_MAX_ITER = 50


def _series(x: float) -> Tuple[float, float]:
    x3 = x * x * x
    # f, g and their derivatives, accumulated term by term
    t, s = 1.0, x
    dt, ds = 0.5 * x * x, 1.0
    f, g, fp, gp = t, s, dt, ds
    for k in range(1, 200):
        t *= x3 / ((3 * k - 1) * (3 * k))
        s *= x3 / ((3 * k) * (3 * k + 1))
        if k >= 2:
            dt *= x3 / ((3 * k - 1) * (3 * k - 3))
            fp += dt
        ds *= x3 / ((3 * k) * (3 * k - 2))
        f += t
        g += s
        gp += ds
        if max(abs(t), abs(s), abs(dt), abs(ds)) < 1e-18:
            break
    return _C1 * f - _C2 * g, _C1 * fp - _C2 * gp


def _asymptotic_coefficients(count: int) -> Tuple[list, list]:
    u = [1.0]
    v = [1.0]
    for k in range(1, count):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k))
        v.append(-u[-1] * (6 * k + 1) / (6 * k - 1))
    return u, v


_U, _V = _asymptotic_coefficients(24)


def _oscillatory(z: float) -> Tuple[float, float]:
    """Ai(-z), Ai'(-z) for large positive z (modulus/phase asymptotic series)."""
    zeta = 2.0 / 3.0 * z**1.5
    even_u = odd_u = even_v = odd_v = 0.0
    prev = math.inf
    for k in range(len(_U)):
        mag = abs(_U[k]) / zeta**k
        if mag > prev:
            break
        prev = mag
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            even_u += sign * _U[k] / zeta**k
            even_v += sign * _V[k] / zeta**k
        else:
            odd_u += sign * _U[k] / zeta**k
            odd_v += sign * _V[k] / zeta**k
        if mag < 1e-17:
            break
    phase = zeta - 0.25 * math.pi
    c, s = math.cos(phase), math.sin(phase)
    root = math.sqrt(math.pi)
    ai = (c * even_u + s * odd_u) / (root * z**0.25)
    aip = z**0.25 * (s * even_v - c * odd_v) / root
    return ai, aip


def _decaying(x: float) -> Tuple[float, float]:
    zeta = 2.0 / 3.0 * x**1.5
    ai = math.sqrt(x / 3.0) * bessel_k(1.0 / 3.0, zeta) / math.pi
    aip = -x * bessel_k(2.0 / 3.0, zeta) / (math.pi * math.sqrt(3.0))
    return ai, aip


def airy_pair(x: float) -> Tuple[float, float]:
    """(Ai(x), Ai'(x))."""
    x = float(x)
    if not abs(x) <= _X_LIMIT:
        raise DomainError(f"Airy functions are evaluated for |x| <= {_X_LIMIT:g}, got {x!r}")
    if x > _SERIES_HI:
        return _decaying(x)
    if x < _SERIES_LO:
        return _oscillatory(-x)
    return _series(x)


def airy_ai(x: float) -> float:
    return airy_pair(x)[0]


def airy_ai_prime(x: float) -> float:
    return airy_pair(x)[1]


def _seed(k: int, derivative: bool) -> float:
    if derivative:
        t = 3.0 * math.pi / 8.0 * (4 * k - 3)
        return t ** (2.0 / 3.0) * (1.0 - 7.0 / 48.0 / t**2 + 35.0 / 288.0 / t**4)
    t = 3.0 * math.pi / 8.0 * (4 * k - 1)
    return t ** (2.0 / 3.0) * (1.0 + 5.0 / 48.0 / t**2 - 5.0 / 36.0 / t**4)


def airy_zero(n: int, which: str = "function") -> float:
    """
    Magnitude of the (n+1)-th zero of Ai (which="function") or Ai' (which="derivative").

    Newton iteration from the asymptotic seeds; Ai'' = x Ai supplies the derivative step.
    """
    if n < 0:
        raise DomainError(f"zero index must be >= 0, got {n}")
    if which not in ("function", "derivative"):
        raise DomainError(f"which must be 'function' or 'derivative', got {which!r}")
    derivative = which == "derivative"
    a = _seed(n + 1, derivative)
    residual = math.inf
    for it in range(_NEWTON_MAX_ITER):
        ai, aip = airy_pair(-a)
        if derivative:
            residual = abs(aip)
            step = -aip / (a * ai)
        else:
            residual = abs(ai)
            step = ai / aip
        a += step
        if abs(step) <= 1e-15 * a or residual < 1e-14:
            logger.debug("airy zero n=%d %s converged in %d steps", n, which, it + 1)
            break
    ai, aip = airy_pair(-a)
    residual = abs(aip if derivative else ai)
    if residual > 1e-10:
        raise SolverError(f"airy_zero({n}, {which}) did not converge: residual {residual:.3e}")
    return a


def airy_zero_table(count: int) -> AiryZeroTable:
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return AiryZeroTable(
        ai_zeros=[airy_zero(n, "function") for n in range(count)],
        ai_prime_zeros=[airy_zero(n, "derivative") for n in range(count)],
    )
