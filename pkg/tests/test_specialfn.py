"""Special functions against mpmath at 40 digits."""

from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest

from app.model.errors import DomainError
from app.specialfn import (
    airy_ai,
    airy_ai_prime,
    airy_zero,
    airy_zero_table,
    bessel_i,
    bessel_i_scaled,
    bessel_k,
    bessel_k_scaled,
    erf,
    erfc,
    erfcx,
    gamma,
    ln_gamma,
)

mpmath.mp.dps = 40


def _rel(a: float, b) -> float:
    return abs(a - float(b)) / abs(float(b))


@pytest.mark.parametrize("x", [0.1, 1 / 6, 0.5, 1.3, 2.5, 4.7, 10.2, 33.3, -0.5, -1.5, -2.3])
def test_gamma_matches_mpmath(x):
    assert _rel(gamma(x), mpmath.gamma(x)) < 1e-13


@pytest.mark.parametrize("x", [0.05, 0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.95])
def test_gamma_reflection(x):
    lhs = gamma(x) * gamma(1.0 - x)
    assert _rel(lhs, math.pi / math.sin(math.pi * x)) < 1e-12


def test_gamma_poles_and_overflow():
    for x in (0.0, -1.0, -4.0):
        with pytest.raises(DomainError):
            gamma(x)
    with pytest.raises(DomainError):
        gamma(200.0)
    with pytest.raises(DomainError):
        ln_gamma(-1.0)


def test_ln_gamma_small_argument():
    assert abs(ln_gamma(1e-3) - float(mpmath.loggamma(1e-3))) < 1e-13


_NEAR_ZEROS = [1.0 - 1e-3, 1.0 - 1e-6, 1.0 + 1e-6, 1.0 + 1e-3, 1.25, 1.75, 2.0 - 1e-5, 2.0 + 1e-5, 2.00136, 2.4]


def test_ln_gamma_relative_accuracy():
    for x in [*np.linspace(0.01, 50.0, 2000), *_NEAR_ZEROS]:
        assert _rel(ln_gamma(float(x)), mpmath.loggamma(float(x))) <= 1e-13, x


@pytest.mark.parametrize("order", [1 / 3, -1 / 3, 1 / 6, -1 / 6, 0.25, -0.75])
@pytest.mark.parametrize("z", [0.1, 1.0, 5.0, 16.9, 17.1, 25.0, 60.0])
def test_bessel_i_matches_mpmath(order, z):
    ref = mpmath.besseli(order, z)
    assert _rel(bessel_i(order, z), ref) < 1e-12
    assert _rel(bessel_i_scaled(order, z), ref * mpmath.exp(-z)) < 1e-12


@pytest.mark.parametrize("order", [1 / 3, 1 / 6, 0.25, 2 / 3])
@pytest.mark.parametrize("z", [0.05, 0.5, 1.9, 2.1, 5.0, 30.0, 200.0])
def test_bessel_k_matches_mpmath(order, z):
    ref = mpmath.besselk(order, z)
    assert _rel(bessel_k(order, z), ref) < 1e-12
    assert _rel(bessel_k_scaled(order, z), ref * mpmath.exp(z)) < 1e-12


@pytest.mark.parametrize("order", [1 / 3, 1 / 6, 0.25])
@pytest.mark.parametrize("z", [0.3, 1.0, 3.0, 10.0, 40.0])
def test_bessel_wronskian(order, z):
    # I_nu K_{1-nu} + I_{nu-1} K_nu = 1/z, the Wronskian of I_nu and K_nu
    w = bessel_i_scaled(order, z) * bessel_k_scaled(1.0 - order, z) + bessel_i_scaled(order - 1.0, z) * bessel_k_scaled(order, z)
    assert abs(w * z - 1.0) < 1e-9


def test_bessel_domain():
    with pytest.raises(DomainError):
        bessel_k(0.0, 1.0)
    with pytest.raises(DomainError):
        bessel_i(1.5, 1.0)
    with pytest.raises(DomainError):
        bessel_k(0.5, -1.0)
    assert bessel_k(1 / 3, 800.0) == 0.0


@pytest.mark.parametrize("x", [-50.0, -10.0, -7.5, -6.9, -3.0, 0.0, 1.0, 1.9, 2.1, 5.0, 20.0])
def test_airy_matches_mpmath(x):
    ai, aip = mpmath.airyai(x), mpmath.airyai(x, derivative=1)
    assert abs(airy_ai(x) - float(ai)) < 1e-10 * max(1.0, abs(float(ai))) + 1e-12 * abs(float(ai))
    assert abs(airy_ai_prime(x) - float(aip)) < 1e-10 * max(1.0, abs(float(aip)))
    if x > 2:
        assert _rel(airy_ai(x), ai) < 1e-10


def test_airy_values_at_tabulated_zeros():
    assert abs(airy_ai(-2.33811)) < 1e-5
    assert abs(airy_ai_prime(-1.01879)) < 1e-5


def test_airy_zeros():
    assert abs(airy_zero(0, "derivative") - 1.01879) < 5e-6
    assert abs(airy_zero(9, "function") - 12.82878) < 5e-6
    for n in range(20):
        assert abs(airy_zero(n) + float(mpmath.airyaizero(n + 1))) < 1e-10
        assert abs(airy_zero(n, "derivative") + float(mpmath.airyaizero(n + 1, derivative=1))) < 1e-10
    with pytest.raises(DomainError):
        airy_zero(-1)
    with pytest.raises(DomainError):
        airy_zero(0, "second")


def test_airy_zero_asymptotic_trend():
    n = 50
    trend = (1.5 * math.pi * n) ** (2 / 3) * (1 + 3 / (4 * n)) ** (2 / 3)
    assert abs(airy_zero(n) / trend - 1.0) < 1e-4


def test_airy_satisfies_its_equation():
    h = 1e-3
    for x in np.linspace(-10.0, 2.0, 49):
        d2 = (-airy_ai_prime(x + 2 * h) + 8 * airy_ai_prime(x + h) - 8 * airy_ai_prime(x - h) + airy_ai_prime(x - 2 * h)) / (12 * h)
        assert abs(d2 - x * airy_ai(x)) < 1e-7 * max(1.0, abs(x))


def test_airy_zero_table_interlaces():
    table = airy_zero_table(20)
    assert table.is_interlaced()
    ladder = table.ladder()
    assert len(ladder) == 40
    assert all(a < b for a, b in zip(ladder, ladder[1:]))
    assert table.rows()[0]["n"] == 0


@pytest.mark.parametrize("x", [0.0, 0.1, 0.9, 2.4, 2.6, 4.0, 6.5])
def test_erf_family(x):
    assert abs(erf(x) - float(mpmath.erf(x))) < 1e-12
    assert abs(erf(-x) + erf(x)) == 0.0
    assert _rel(erfc(x), mpmath.erfc(x)) < 1e-9
    assert _rel(erfcx(x), mpmath.exp(x * x) * mpmath.erfc(x)) < 1e-9


def test_erfcx_large_and_negative():
    assert _rel(erfcx(30.0), mpmath.exp(900) * mpmath.erfc(30)) < 1e-12
    assert _rel(erfcx(-1.0), mpmath.exp(1) * mpmath.erfc(-1)) < 1e-12
