# app/greens/structure.py
#
# Pointwise checks on the two half-line Green's functions built from the zero-energy
# basis: G1 vanishes at the origin, G2 has zero slope there.

from __future__ import annotations

from typing import Tuple

import numpy as np

from ..model.errors import UsageError
from ..model.solutions import ZeroEnergySolution

Basis = Tuple[ZeroEnergySolution, ZeroEnergySolution, ZeroEnergySolution]

_KINDS = ("G1", "G2")
_PDE_WINDOW_V = 100.0


def _regular(basis: Basis, which: str) -> Tuple[ZeroEnergySolution, float]:
    """Solution regular at the origin for this Green's function and its prefactor."""
    xi1, xi2, phi2 = basis
    if which == "G1":
        return xi2, 1.0
    if which == "G2":
        return xi1, -1.0 / float(phi2.decay_coefficient)
    raise UsageError(f"unknown Green's function {which!r}; expected one of {', '.join(_KINDS)}")


def greens_value(basis: Basis, x: float, y: float, which: str = "G1") -> float:
    u, scale = _regular(basis, which)
    phi2 = basis[2]
    lo, hi = min(abs(x), abs(y)), max(abs(x), abs(y))
    return float(scale * u.at(lo) * phi2.at(hi))


def slope_jump(basis: Basis, y: float, which: str = "G1") -> float:
    """dG/dx(y+, y) - dG/dx(y-, y); equals -1 for a unit source."""
    u, scale = _regular(basis, which)
    phi2 = basis[2]
    return float(scale * (u.at(y) * phi2.slope_at(y) - u.slope_at(y) * phi2.at(y)))


def boundary_values(basis: Basis, y: float) -> Tuple[float, float]:
    """(G1(0, y), dG2/dx(0, y)) evaluated on the stored solutions."""
    u, scale = _regular(basis, "G2")
    g1 = greens_value(basis, 0.0, y, "G1")
    dg2 = float(scale * u.slope_at(0.0) * basis[2].at(abs(y)))
    return g1, dg2


def pde_residual(basis: Basis, y: float, which: str = "G1") -> float:
    """
    Largest scaled residual of -G'' + V G on grid points away from the source.

    Uses the five-point second difference on the stored samples, restricted to where
    V <= 100 so the truncation error stays below the solver tolerance.
    """
    u, scale = _regular(basis, which)
    phi2 = basis[2]
    x = phi2.grid
    h = float(x[1] - x[0])
    v = np.asarray(phi2.potential.value(x), dtype=float)
    g = np.where(x < y, scale * u.values * float(phi2.at(y)), scale * float(u.at(y)) * phi2.values)

    i = np.arange(2, len(x) - 2)
    d2 = (-g[i + 2] + 16.0 * g[i + 1] - 30.0 * g[i] + 16.0 * g[i - 1] - g[i - 2]) / (12.0 * h * h)
    res = -d2 + v[i] * g[i]
    away = (np.abs(x[i] - y) > 2.5 * h) & (v[i] <= _PDE_WINDOW_V) & np.isfinite(v[i])
    if not np.any(away):
        return 0.0
    scale_ref = np.max(np.abs(g[i][away]) * np.maximum(1.0, v[i][away]))
    return float(np.max(np.abs(res[away])) / scale_ref)
