# app/specialfn/gammafn.py

from __future__ import annotations

import math

from scipy.special import zeta

from ..model.errors import DomainError

# Lanczos approximation, g = 7, nine terms; relative error ~2e-15 for x >= 1/2
_G = 7.0
_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)

# ln Gamma(1 + z) = -log1p(z) + (1 - euler) z + sum_k (zeta(k) - 1) (-z)**k / k, used on |z| <= 1/2
_EULER = 0.57721566490153286
_ZETA_MINUS_ONE = tuple(float(zeta(k, 2.0)) for k in range(2, 60))


def _lanczos_ln_gamma(x: float) -> float:
    z = x - 1.0
    a = _COEF[0]
    for k in range(1, len(_COEF)):
        a += _COEF[k] / (z + k)
    t = z + _G + 0.5
    return _HALF_LN_2PI + (z + 0.5) * math.log(t) - t + math.log(a)


def _ln_gamma_one_plus(z: float) -> float:
    acc = 0.0
    power = -z
    for k, c in enumerate(_ZETA_MINUS_ONE, start=2):
        power *= -z
        acc += c * power / k
    return -math.log1p(z) + (1.0 - _EULER) * z + acc


def ln_gamma(x: float) -> float:
    """
    ln Gamma(x) for x > 0, relative error below 1e-13 on (0, 50].

    Around the zeros at x = 1 and x = 2 a series in x - 1 (or x - 2) replaces Lanczos.
    """
    x = float(x)
    if not x > 0 or math.isinf(x):
        raise DomainError(f"ln_gamma needs a positive finite argument, got {x!r}")
    if 0.5 <= x < 1.5:
        return _ln_gamma_one_plus(x - 1.0)
    if 1.5 <= x < 2.5:
        e = x - 2.0
        return _ln_gamma_one_plus(e) + math.log1p(e)
    if x < 0.5:
        # Gamma(x) = Gamma(x + 1) / x
        return _ln_gamma_one_plus(x) - math.log(x)
    return _lanczos_ln_gamma(x)


def gamma(x: float) -> float:
    """Gamma(x) for real x that is not a non-positive integer."""
    x = float(x)
    if x > 0:
        if x > 171.6:
            raise DomainError(f"gamma({x!r}) overflows a double")
        return math.exp(ln_gamma(x))
    if x == math.floor(x):
        raise DomainError(f"gamma has a pole at {x!r}")
    # reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
