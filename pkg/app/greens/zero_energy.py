# app/greens/zero_energy.py

from __future__ import annotations

import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import quad, solve_ivp

from ..config import Settings
from ..model.errors import SolverError
from ..model.potentials import PotentialKind, PotentialSpec
from ..model.solutions import ZeroEnergySolution

logger = logging.getLogger(__name__)

_RTOL = 1e-12
_ATOL = 1e-14
# extra action between the grid end and the inward starting point, and a second
# shorter start used to confirm c
_FAR_ACTION = 10.0
_CHECK_ACTION = 6.0
C_STABILITY = 1e-8


def _momentum(t: float, spec: PotentialSpec) -> float:
    return math.sqrt(max(float(spec.value(t)), 0.0))


def _action_to(spec: PotentialSpec, start: float, target: float) -> float:
    """Smallest x >= start with integral of sqrt(max(V, 0)) over [start, x] >= target."""
    if spec.is_power_law:
        n, g = float(spec.N), spec.strength
        k = 0.5 * n + 1.0
        base = math.sqrt(g) * start**k / k
        return ((base + target) * k / math.sqrt(g)) ** (1.0 / k)
    x, acc = start, 0.0
    while acc < target:
        dx = 0.02 * max(1.0, x)
        piece, _ = quad(_momentum, x, x + dx, args=(spec,))
        if acc + piece >= target and piece > 0:
            # finish inside the last chunk
            lo, hi = x, x + dx
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if acc + quad(_momentum, x, mid, args=(spec,))[0] >= target:
                    hi = mid
                else:
                    lo = mid
            return hi
        acc += piece
        x += dx
        if x > 1e8:
            raise SolverError(f"{spec.label}: potential too flat to reach action {target:g}")
    return x


def _outward(spec: PotentialSpec, grid: np.ndarray, value: float, slope: float):
    def rhs(x, y):
        v = float(spec.value(x))
        return [y[1], v * y[0], y[0] * y[0]]

    sol = solve_ivp(
        rhs,
        (0.0, float(grid[-1])),
        [value, slope, 0.0],
        method="DOP853",
        t_eval=grid,
        rtol=_RTOL,
        atol=_ATOL,
        max_step=float(grid[-1]) / 200.0,
    )
    if not sol.success:
        raise SolverError(f"{spec.label}: outward integration failed: {sol.message}")
    return sol.y


def _inward(spec: PotentialSpec, grid: np.ndarray, x_far: float):
    """Decaying solution, started with two-term WKB data at x_far, sampled on grid."""
    v, d1, _ = (float(a) for a in spec.derivatives(x_far))
    p = math.sqrt(v)
    slope = -(p + d1 / (4.0 * v))

    def rhs(x, y):
        return [y[1], float(spec.value(x)) * y[0]]

    sol = solve_ivp(
        rhs,
        (x_far, 0.0),
        [1.0, slope],
        method="DOP853",
        t_eval=grid[::-1],
        rtol=_RTOL,
        atol=_ATOL,
        max_step=x_far / 200.0,
    )
    if not sol.success:
        raise SolverError(f"{spec.label}: inward integration failed: {sol.message}")
    return sol.y[0][::-1], sol.y[1][::-1]


def _box_solutions(spec: PotentialSpec, settings: Settings) -> Tuple[ZeroEnergySolution, ...]:
    L = float(spec.half_width)
    x = np.linspace(0.0, L, settings.greens_points)
    one, zero = np.ones_like(x), np.zeros_like(x)
    c = -1.0 / L
    xi1 = ZeroEnergySolution("xi1", x, one, zero, (1.0, 0.0), spec, running_norm=x.copy(), hard_wall=True)
    xi2 = ZeroEnergySolution("xi2", x, x.copy(), one, (0.0, 1.0), spec, running_norm=x**3 / 3.0, hard_wall=True)
    phi2 = ZeroEnergySolution("phi2", x, 1.0 + c * x, np.full_like(x, c), (1.0, c), spec, decay_coefficient=c, hard_wall=True)
    return xi1, xi2, phi2


def _grid_end(spec: PotentialSpec, settings: Settings) -> float:
    x_max = _action_to(spec, 0.0, settings.greens_action)
    end = spec.table_end
    if end is not None and x_max > end:
        logger.warning(
            "%s: table ends at x=%g before zero-energy action %g; truncating the grid", spec.label, end, settings.greens_action
        )
        x_max = end
    return x_max


def build_zero_energy_solutions(
    spec: PotentialSpec,
    settings: Optional[Settings] = None,
) -> Tuple[ZeroEnergySolution, ZeroEnergySolution, ZeroEnergySolution]:
    """
    xi1 (value 1, slope 0), xi2 (value 0, slope 1) and the decaying Phi2 = xi1 + c xi2.

    The decaying solution is integrated inward from beyond the grid and matched through
    Wronskians: c = W(xi1, phi) / W(phi, xi2). A second, shorter inward start must reproduce c.
    """
    settings = settings or Settings()
    if spec.kind is PotentialKind.BOX:
        return _box_solutions(spec, settings)

    x_max = _grid_end(spec, settings)
    grid = np.linspace(0.0, x_max, settings.greens_points)
    y1 = _outward(spec, grid, 1.0, 0.0)
    y2 = _outward(spec, grid, 0.0, 1.0)
    xi1 = ZeroEnergySolution("xi1", grid, y1[0], y1[1], (1.0, 0.0), spec, running_norm=y1[2])
    xi2 = ZeroEnergySolution("xi2", grid, y2[0], y2[1], (0.0, 1.0), spec, running_norm=y2[2])

    match = len(grid) // 2
    estimates = []
    phi = dphi = None
    for extra in (_FAR_ACTION, _CHECK_ACTION):
        x_far = _action_to(spec, x_max, extra)
        f, df = _inward(spec, grid, x_far)
        w_1 = xi1.values[match] * df[match] - f[match] * xi1.derivatives[match]
        w_2 = f[match] * xi2.derivatives[match] - xi2.values[match] * df[match]
        estimates.append((w_1 / w_2, w_2))
        if phi is None:
            phi, dphi = f, df

    (c, amplitude), (c_check, _) = estimates
    drift = abs(c - c_check) / abs(c)
    logger.debug("%s: c=%.15g (check %.15g, drift %.2e), x_max=%.4g", spec.label, c, c_check, drift, x_max)
    if drift > C_STABILITY:
        raise SolverError(
            f"{spec.label}: decay coefficient not stabilized (relative change {drift:.2e} > {C_STABILITY:g} between matching radii)"
        )
    phi2 = ZeroEnergySolution(
        "phi2",
        grid,
        phi / amplitude,
        dphi / amplitude,
        (1.0, c),
        spec,
        decay_coefficient=c,
    )
    return xi1, xi2, phi2


def wronskian_drift(a: ZeroEnergySolution, b: ZeroEnergySolution) -> float:
    """Largest change of W(a, b) along the grid, relative to the size of its two terms."""
    w = a.values * b.derivatives - b.values * a.derivatives
    scale = np.maximum(np.abs(a.values * b.derivatives) + np.abs(b.values * a.derivatives), 1.0)
    return float(np.max(np.abs(w - w[0]) / scale))
