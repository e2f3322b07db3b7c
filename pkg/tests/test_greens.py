"""Zero-energy solutions, Green's functions and their integrals."""

from __future__ import annotations

import dataclasses
import math

import mpmath
import numpy as np
import pytest

from app.greens import (
    boundary_values,
    build_zero_energy_solutions,
    compact_form_check,
    erf_identity_integrand,
    erf_integral_identity,
    general_sum_rules,
    greens_diagonal,
    greens_value,
    pde_residual,
    power_law_greens,
    power_law_greens_diag,
    second_order_sum,
    slope_jump,
    sum_rule_S_by_quadrature,
    wronskian_drift,
)
from app.model.errors import DivergentSumError, DomainError
from app.model.potentials import Parity, PotentialSpec
from app.model.solutions import GreensDiagonal
from app.powerlaw import closed_form_S, closed_form_S1, closed_form_S2, derive_params, ladder_tail
from app.spectrum import partial_inverse_sum, solve_spectrum

mpmath.mp.dps = 30


@pytest.mark.parametrize("N", [1.0, 2.0, 3.0, 4.0, 6.0])
def test_quadrature_matches_closed_form(N):
    p = derive_params(N)
    assert abs(sum_rule_S_by_quadrature(p) - closed_form_S(p)) < 1e-8


def test_quadrature_with_strength():
    p = derive_params(3.0, 2.5)
    assert abs(sum_rule_S_by_quadrature(p) - closed_form_S(p)) < 1e-8


@pytest.mark.parametrize("N", [1.0, 4.0])
@pytest.mark.parametrize("x", [0.3, 1.0, 2.2])
def test_diagonal_difference_normalization(N, x):
    p = derive_params(N)
    b, nu = mpmath.mpf(1) / (N + 2), mpmath.mpf(2) / (N + 2)
    z = nu * mpmath.mpf(x) ** (1 / nu)
    k = mpmath.besselk(b, z)
    raw = nu * x * (mpmath.besseli(-b, z) - mpmath.besseli(b, z)) * k
    assert abs(power_law_greens_diag(p, x, "diff") - float(raw)) < 1e-12 * float(raw)
    diff = power_law_greens_diag(p, x, "G2") - power_law_greens_diag(p, x, "G1")
    assert abs(diff - float(raw)) < 1e-10 * float(raw)


def test_off_diagonal_reduces_to_diagonal():
    p = derive_params(3.0)
    for which in ("G1", "G2"):
        assert abs(power_law_greens(p, 0.8, 0.8, which) - power_law_greens_diag(p, 0.8, which)) < 1e-14
    assert power_law_greens(p, 0.5, 1.5) == power_law_greens(p, 1.5, 0.5)
    with pytest.raises(DomainError):
        power_law_greens_diag(p, 0.0)


def test_numerical_diagonal_matches_bessel_form(quartic_basis):
    p = derive_params(4.0)
    for x in (0.4, 1.0, 1.8):
        for which in ("G1", "G2"):
            ref = power_law_greens_diag(p, x, which)
            assert abs(greens_value(quartic_basis, x, x, which) - ref) < 1e-8 * ref
    assert abs(greens_value(quartic_basis, 0.5, 1.2) - power_law_greens(p, 0.5, 1.2)) < 1e-8


def test_decaying_solution_for_linear_potential(linear_basis):
    _, _, phi2 = linear_basis
    xs = np.linspace(0.5, 3.0, 11)
    ratios = [float(phi2.at(x)) / float(mpmath.sqrt(x) * mpmath.besselk(mpmath.mpf(1) / 3, 2 * x**1.5 / 3)) for x in xs]
    assert max(ratios) - min(ratios) < 1e-6 * abs(ratios[0])


def test_shifted_oscillator_solutions(shifted_basis):
    xi1, _, phi2 = shifted_basis
    assert abs(phi2.decay_coefficient + 2.0 / math.sqrt(math.pi)) < 1e-8
    for x in (0.5, 1.0, 2.0):
        assert abs(float(xi1.at(x)) - math.exp(0.5 * x * x)) < 1e-9 * math.exp(0.5 * x * x)
        ref = float(mpmath.exp(x * x / 2) * mpmath.erfc(x))
        assert abs(float(phi2.at(x)) - ref) < 1e-8 * ref
    assert abs(greens_value(shifted_basis, 0.0, 0.0, "G2") - 0.5 * math.sqrt(math.pi)) < 1e-8


def test_shifted_oscillator_sums(shifted, shifted_basis, settings):
    sums = general_sum_rules(shifted, settings, shifted_basis)
    assert abs(sums.S - 0.5 * math.log(2.0)) < 1e-8
    assert sums.S1 is None and sums.S2 is None
    assert sums.divergent == {"S1": True, "S2": True, "S": False}
    # twice the equal-point difference integrates to ln 2
    assert abs(erf_integral_identity() - 2.0 * sums.S) < 1e-7
    assert abs(sums.log_growth["S1"] - 0.5) < 1e-3
    # diagonal decays as 1/(2x)
    assert abs(sums.decay_exponents["S1"] - 1.0) < 0.05
    with pytest.raises(DivergentSumError):
        sums.require("S1")


def test_erf_identity():
    assert abs(erf_integral_identity() - math.log(2.0)) < 1e-8
    x = 10.0
    ref = mpmath.sqrt(mpmath.pi) * mpmath.erfc(x) ** 2 * mpmath.exp(x * x)
    assert abs(erf_identity_integrand(x) - float(ref)) < 1e-12 * float(ref)
    assert erf_identity_integrand(np.array([0.0, 1.0])).shape == (2,)
    assert abs(erf_identity_integrand(0.0) - math.sqrt(math.pi)) < 1e-14


def test_quartic_sums(quartic, quartic_basis, settings):
    p = derive_params(4.0)
    sums = general_sum_rules(quartic, settings, quartic_basis)
    assert abs(sums.S - closed_form_S(p)) < 1e-6
    assert abs(sums.require("S1") - closed_form_S1(p)) < 1e-6
    assert abs(sums.require("S2") - closed_form_S2(p)) < 1e-6
    assert abs(sums.S2 - sums.S1 - sums.S) < 1e-6
    assert all(err < 1e-8 for err in sums.errors.values())
    assert sums.errors["consistency"] < 1e-7
    assert max(sums.log_growth.values()) < 1e-3


def test_box_solutions_are_analytic(settings):
    box = PotentialSpec.box()
    basis = build_zero_energy_solutions(box, settings)
    assert basis[2].hard_wall and basis[2].decay_coefficient == pytest.approx(-2.0 / math.pi)
    sums = general_sum_rules(box, settings, basis)
    assert abs(sums.S1 - math.pi**2 / 24) < 1e-10
    assert abs(sums.S2 - math.pi**2 / 8) < 1e-10
    assert abs(sums.S - math.pi**2 / 12) < 1e-10
    assert abs(second_order_sum(box, Parity.ODD, settings, basis) - math.pi**4 / 1440) < 1e-6
    assert abs(second_order_sum(box, Parity.EVEN, settings, basis) - math.pi**4 / 96) < 1e-6


def test_second_order_sums(quartic, quartic_basis, shifted, shifted_basis, settings):
    even = solve_spectrum(quartic, Parity.EVEN, 5, settings)
    ref = partial_inverse_sum(even, 2) + ladder_tail(derive_params(4.0), 4, Parity.EVEN, 2)
    assert abs(second_order_sum(quartic, Parity.EVEN, settings, quartic_basis) - ref) < 1e-4

    assert abs(second_order_sum(shifted, Parity.EVEN, settings, shifted_basis) - math.pi**2 / 32) < 1e-6
    assert abs(second_order_sum(shifted, Parity.ODD, settings, shifted_basis) - math.pi**2 / 96) < 1e-6

    with pytest.raises(DivergentSumError):
        second_order_sum(PotentialSpec.power_law(0.5), Parity.EVEN, settings)


@pytest.mark.parametrize("basis_name", ["quartic_basis", "shifted_basis", "linear_basis"])
def test_wronskians_constant(request, basis_name):
    xi1, xi2, phi2 = request.getfixturevalue(basis_name)
    assert wronskian_drift(xi1, xi2) < 1e-8
    assert wronskian_drift(xi2, phi2) < 1e-8


@pytest.mark.parametrize("basis_name", ["quartic_basis", "shifted_basis"])
def test_green_structure(request, basis_name):
    basis = request.getfixturevalue(basis_name)
    for y in (0.3, 1.0, 2.0):
        for which in ("G1", "G2"):
            assert abs(slope_jump(basis, y, which) + 1.0) < 1e-6
            assert pde_residual(basis, y, which) < 1e-5
            assert abs(greens_value(basis, 0.7, y, which) - greens_value(basis, y, 0.7, which)) < 1e-14
        g1, dg2 = boundary_values(basis, y)
        assert abs(g1) < 1e-8 and abs(dg2) < 1e-8


def test_compact_forms(quartic, quartic_basis, shifted, shifted_basis, settings):
    quartic_res = compact_form_check(quartic, settings, quartic_basis)
    assert set(quartic_res) == {"S", "S1", "S2"}
    assert max(quartic_res.values()) < 1e-6
    shifted_res = compact_form_check(shifted, settings, shifted_basis)
    assert set(shifted_res) == {"S"}
    assert shifted_res["S"] < 1e-6


def test_diagonal_export(quartic_basis):
    diag = greens_diagonal(quartic_basis)
    rows = diag.rows()
    assert GreensDiagonal.csv_header() == ["x", "g1", "g2", "difference"]
    assert len(rows) == len(diag.grid)
    assert float(rows[0]["g1"]) == 0.0
    assert np.all(diag.difference > 0)
    k = 50
    assert np.allclose(diag.difference[:k], diag.g2_diag[:k] - diag.g1_diag[:k], rtol=1e-7, atol=0.0)


def test_compact_form_needs_the_right_reference(quartic, quartic_basis, settings):
    s = general_sum_rules(quartic, settings, quartic_basis).S
    res = compact_form_check(quartic, settings, quartic_basis, reference={"S": 5.0 * s})
    assert set(res) == {"S"}
    assert res["S"] > 1.0 * abs(quartic_basis[2].decay_coefficient)


def test_boundary_values_see_the_stored_solutions(quartic_basis):
    xi1, xi2, phi2 = quartic_basis
    shifted_xi2 = dataclasses.replace(xi2, values=xi2.values + 0.5)
    g1, _ = boundary_values((xi1, shifted_xi2, phi2), 1.0)
    assert abs(g1 - 0.5 * float(phi2.at(1.0))) < 1e-12

    tilted_xi1 = dataclasses.replace(xi1, derivatives=xi1.derivatives + 0.5)
    _, dg2 = boundary_values((tilted_xi1, xi2, phi2), 1.0)
    assert abs(dg2) > 0.1 * abs(float(phi2.at(1.0)))


def test_log_growth_flags_n_just_above_two(settings):
    sums = general_sum_rules(PotentialSpec.power_law(2.01), settings)
    assert sums.divergent["S1"] and sums.divergent["S2"]
    assert sums.S1 is None and sums.S2 is None
    assert sums.log_growth["S1"] > 0.1
