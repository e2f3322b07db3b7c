# app/spectrum/numerov.py

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
from scipy.integrate import quad

from ..model.errors import DomainError, SolverError
from ..model.potentials import Parity, PotentialSpec

logger = logging.getLogger(__name__)

# V(x_max) must clear the largest eigenvalue sought by this margin
ENERGY_MARGIN = 25.0
_MIN_STEPS = 2000
_RESCALE = 1e250


@dataclass
class Shot:
    end_value: float
    nodes: int


@dataclass
class Grid:
    x_max: float
    steps: int
    h: float
    lam_floor: float
    lam_ceiling: float

    def as_dict(self) -> Dict[str, float]:
        return {"x_max": self.x_max, "step": self.h, "steps": self.steps}


def _barrier_momentum(t: float, spec: PotentialSpec, lam: float) -> float:
    return math.sqrt(max(float(spec.value(t)) - lam, 0.0))


def barrier_action(spec: PotentialSpec, lam: float, x_from: float, x_to: float) -> float:
    """Integral of sqrt(V - lam) over [x_from, x_to] (forbidden region only)."""
    if x_to <= x_from:
        return 0.0
    val, _ = quad(_barrier_momentum, x_from, x_to, args=(spec, lam), limit=200)
    return float(val)


def choose_grid(
    spec: PotentialSpec,
    lam_ceiling: float,
    *,
    points_per_wavelength: int,
    decay_action: float,
) -> Grid:
    """
    Grid [0, x_max] for eigenvalues up to lam_ceiling.

    x_max clears lam_ceiling + ENERGY_MARGIN and a barrier action of `decay_action`;
    a user-supplied cutoff is checked against the same criteria.
    """
    x_t = spec.turning_point(lam_ceiling)
    limit = spec.table_end
    if spec.domain_cutoff is not None:
        x_max = float(spec.domain_cutoff)
        action = barrier_action(spec, lam_ceiling, x_t, x_max)
        if x_max <= x_t or action < decay_action:
            raise SolverError(
                f"{spec.label}: domain cutoff {x_max:g} too small, wavefunction not decayed "
                f"(barrier action {action:.2f} < {decay_action:g} at lambda={lam_ceiling:.4g}); use a larger cutoff"
            )
    else:
        dx = max(x_t, 1.0) / 200.0
        x_max = x_t
        action = 0.0
        while True:
            nxt = x_max + dx
            if limit is not None and nxt > limit:
                raise SolverError(
                    f"{spec.label}: potential table ends at x={limit:g} before the wavefunction decays "
                    f"(barrier action {action:.2f} < {decay_action:g} at lambda={lam_ceiling:.4g}); extend the table"
                )
            action += barrier_action(spec, lam_ceiling, x_max, nxt)
            x_max = nxt
            if action >= decay_action and float(spec.value(x_max)) >= lam_ceiling + ENERGY_MARGIN:
                break

    lam_floor = spec.minimum(x_max)
    span = max(lam_ceiling - lam_floor, 1.0)
    h = 2.0 * math.pi / math.sqrt(span) / points_per_wavelength
    steps = max(int(math.ceil(x_max / h)), _MIN_STEPS)
    return Grid(x_max=x_max, steps=steps, h=x_max / steps, lam_floor=lam_floor, lam_ceiling=lam_ceiling)


class Shooter:
    """
    Numerov integration of psi'' = (V - lam) psi outward from the origin.

    Works in u = (1 - h^2 f / 12) psi so each step is u+ = 2u - u- + h^2 f psi.
    The first step is a one-sided Taylor expansion, exact to O(h^5) even when V
    has a kink at the origin.
    """

    def __init__(self, spec: PotentialSpec, parity: Parity, grid: Grid) -> None:
        if spec.table_end is not None and grid.x_max > spec.table_end + 1e-12:
            raise DomainError(f"grid exceeds the potential table ({grid.x_max} > {spec.table_end})")
        self.spec = spec
        self.parity = parity
        self.grid = grid
        x = np.linspace(0.0, grid.x_max, grid.steps + 1)
        self.v: List[float] = [float(a) for a in spec.value(x)]
        self._cache: Dict[float, Shot] = {}

    def shoot(self, lam: float) -> Shot:
        hit = self._cache.get(lam)
        if hit is not None:
            return hit
        shot = self._integrate(lam)
        self._cache[lam] = shot
        return shot

    def _integrate(self, lam: float) -> Shot:
        h = self.grid.h
        h2 = h * h
        v = self.v
        m = len(v) - 1

        f0, f1, f2 = v[0] - lam, v[1] - lam, v[2] - lam
        # one-sided derivatives of f at the origin
        d1 = (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h)
        d2 = (f0 - 2.0 * f1 + f2) / h2
        if self.parity is Parity.EVEN:
            psi0 = 1.0
            psi1 = 1.0 + h2 * f0 / 2.0 + h2 * h * d1 / 6.0 + h2 * h2 * (d2 + f0 * f0) / 24.0
        else:
            psi0 = 0.0
            psi1 = h + h2 * h * f0 / 6.0 + h2 * h2 * d1 / 12.0

        c = h2 / 12.0
        u_prev = (1.0 - c * f0) * psi0
        u = (1.0 - c * f1) * psi1
        psi = psi1
        nodes = 0
        for i in range(1, m):
            g = h2 * (v[i] - lam)
            u_next = 2.0 * u - u_prev + g * psi
            psi_next = u_next / (1.0 - c * (v[i + 1] - lam))
            if (psi_next < 0.0) != (psi < 0.0) and psi_next != 0.0:
                nodes += 1
            u_prev, u, psi = u, u_next, psi_next
            if abs(u) > _RESCALE:
                u_prev /= _RESCALE
                u /= _RESCALE
                psi /= _RESCALE
        return Shot(end_value=psi, nodes=nodes)

    def nodes(self, lam: float) -> int:
        return self.shoot(lam).nodes

    def mismatch(self, lam: float) -> float:
        return self.shoot(lam).end_value

    def samples(self) -> List[tuple]:
        return list(self._cache.items())
