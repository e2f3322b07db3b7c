"""Closed forms and WKB ladders for V = gamma |x|^N."""

from __future__ import annotations

import math

import mpmath
import pytest

from app.model.errors import DivergentSumError, DomainError
from app.model.potentials import Parity
from app.powerlaw import (
    box_limit_sums,
    box_scaled_S,
    box_sums,
    closed_form_S,
    closed_form_S1,
    closed_form_S2,
    closed_form_sums,
    derive_params,
    ladder_tail,
    wkb_constant,
    wkb_difference_tail,
    wkb_eigenvalue,
)
from app.specialfn import gammafn

mpmath.mp.dps = 30


def _mp_S(N: float) -> float:
    b = mpmath.mpf(1) / (N + 2)
    g = mpmath.gamma
    return float(b ** (2 - 4 * b) * g(3 * b) * g(2 * b) ** 2 / (g(4 * b) * g(1 - b)))


@pytest.mark.parametrize("N", [0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 10.0])
def test_closed_form_S_matches_mpmath(N):
    p = derive_params(N)
    assert abs(closed_form_S(p) - _mp_S(N)) < 1e-13
    assert abs(closed_form_S(p, "reflected") - closed_form_S(p)) < 1e-12


def test_known_values():
    assert abs(closed_form_S(derive_params(2.0)) - math.pi / 4) < 1e-13
    assert abs(closed_form_S(derive_params(1.0)) - 0.729) < 1e-3
    quartic = derive_params(4.0)
    assert abs(closed_form_S(quartic) - 0.76330) < 1e-5
    assert abs(closed_form_S1(quartic) - closed_form_S(quartic)) < 1e-13
    assert abs(closed_form_S2(quartic) - 2.0 * closed_form_S(quartic)) < 1e-13


@pytest.mark.parametrize("N", [2.5, 3.0, 4.0, 6.0, 10.0])
def test_ladder_sums_consistent(N):
    p = derive_params(N)
    s, s1, s2 = closed_form_S(p), closed_form_S1(p), closed_form_S2(p)
    assert abs((s2 - s1) - s) < 1e-12
    assert abs(closed_form_S1(p, "gamma") - s1) < 1e-12
    assert abs(closed_form_S2(p, "gamma") - s2) < 1e-12


@pytest.mark.parametrize("N", [1.0, 2.0])
def test_ladder_sums_diverge_at_or_below_oscillator(N):
    p = derive_params(N)
    with pytest.raises(DivergentSumError):
        closed_form_S1(p)
    with pytest.raises(DivergentSumError):
        closed_form_S2(p)
    sums = closed_form_sums(p)
    assert sums.divergent["S1"] and sums.divergent["S2"]
    assert sums.S1 is None and sums.S2 is None


def test_strength_scaling():
    weak, strong = derive_params(3.0), derive_params(3.0, 4.0)
    assert abs(closed_form_S(strong) - 4.0 ** (-weak.nu) * closed_form_S(weak)) < 1e-13
    assert abs(wkb_eigenvalue(strong, 5) - 4.0**weak.nu * wkb_eigenvalue(weak, 5)) < 1e-10


def test_bad_parameters():
    with pytest.raises(DomainError):
        derive_params(0.0)
    with pytest.raises(DomainError):
        derive_params(3.0, -1.0)
    with pytest.raises(DomainError):
        closed_form_S(derive_params(3.0), "other")


def test_wkb_constant_and_oscillator_ladder():
    assert abs(wkb_constant(2.0) - 2.0) < 1e-13
    assert abs(wkb_constant(1.0) - 0.75 * math.pi) < 1e-13
    sho = derive_params(2.0)
    for n in range(10):
        assert abs(wkb_eigenvalue(sho, n) - (2 * n + 1)) < 1e-11


def test_quartic_ladder_tails():
    p = derive_params(4.0)
    assert abs(ladder_tail(p, 4, Parity.ODD) - 0.31349) < 1e-5
    # the even tail is 0.32413; the printed 0.30413 has a transposed digit
    assert abs(ladder_tail(p, 4, Parity.EVEN) - 0.32413) < 1e-5


def test_ladder_tail_divergence():
    with pytest.raises(DivergentSumError):
        ladder_tail(derive_params(2.0), 4, Parity.EVEN)
    # p = 2 converges for the oscillator
    assert ladder_tail(derive_params(2.0), 4, Parity.EVEN, 2) > 0


def test_linear_difference_tail():
    p = derive_params(1.0)
    assert abs(wkb_difference_tail(p, 10, leading_order=True) - 0.037) < 1e-3
    full = wkb_difference_tail(p, 9)
    assert 0.03 < full < 0.045


def test_difference_tail_log_case():
    # 2Np/(N+2) = 1 at N = 2, p = 1
    p = derive_params(2.0)
    assert abs(wkb_difference_tail(p, 4) - math.log(5.25 / 4.75) / 4.0) < 1e-14


def test_box_limits():
    pi2 = math.pi**2
    sums = box_sums()
    assert abs(sums.S1 - pi2 / 24) < 1e-12
    assert abs(sums.S2 - pi2 / 8) < 1e-12
    assert abs(sums.S - pi2 / 12) < 1e-12
    assert abs(box_limit_sums().S - sums.S) < 1e-14
    assert abs(box_scaled_S(1e-6) - pi2 / 12) < 1e-4
    assert abs(box_sums(p=2).S1 - math.pi**4 / 1440) < 1e-12
    wide = box_sums(half_width=1.0)
    assert abs(wide.S1 - 1.0 / 6.0) < 1e-12


def test_gamma_fault_shifts_closed_form(monkeypatch):
    p = derive_params(4.0)
    clean = closed_form_S(p)
    real = gammafn.gamma
    monkeypatch.setattr(gammafn, "gamma", lambda x: real(x) * (1.0 + 1e-3))
    assert abs(closed_form_S(p) - clean) > 5e-4
