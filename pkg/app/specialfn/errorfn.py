# app/specialfn/errorfn.py

from __future__ import annotations

import math

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_SQRT_PI = math.sqrt(math.pi)

# positive-term series below, continued fraction for erfcx above
_CF_THRESHOLD = 2.5
_CF_DEPTH = 120


def _erf_series(x: float) -> float:
    # erf x = (2/sqrt(pi)) exp(-x^2) sum 2^k x^(2k+1) / (2k+1)!!
    q = 2.0 * x * x
    term = x
    total = x
    for k in range(1, 400):
        term *= q / (2 * k + 1)
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return _TWO_OVER_SQRT_PI * math.exp(-x * x) * total


def _erfcx_cf(x: float) -> float:
    f = x
    for k in range(_CF_DEPTH, 0, -1):
        f = x + 0.5 * k / f
    return 1.0 / (_SQRT_PI * f)


def erfcx(x: float) -> float:
    """Scaled complement exp(x^2) * (1 - erf x), stable for large positive x."""
    x = float(x)
    if x >= _CF_THRESHOLD:
        return _erfcx_cf(x)
    if x < 0:
        if x < -26.0:
            return math.inf
        return 2.0 * math.exp(x * x) - erfcx(-x)
    return math.exp(x * x) * (1.0 - _erf_series(x))


def erfc(x: float) -> float:
    x = float(x)
    if x >= _CF_THRESHOLD:
        return _erfcx_cf(x) * math.exp(-x * x)
    return 1.0 - erf(x)


def erf(x: float) -> float:
    """Error function, absolute error below 1e-12."""
    x = float(x)
    if math.isnan(x):
        return x
    if x < 0:
        return -erf(-x)
    if x >= _CF_THRESHOLD:
        return 1.0 - erfc(x)
    return _erf_series(x)
