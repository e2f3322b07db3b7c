# app/spectrum/shooting.py

from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from ..config import Settings
from ..model.errors import DomainError, SolverError
from ..model.potentials import Parity, PotentialKind, PotentialSpec
from ..model.spectra import Spectrum
from .ladders import ladder_for
from .numerov import Grid, Shooter, choose_grid

logger = logging.getLogger(__name__)

_MAX_CEILING_DOUBLINGS = 40
_MAX_BISECTIONS = 200
# smallest relative tolerance brentq accepts
_BRENT_RTOL = 4.0 * np.finfo(float).eps


def _box_spectrum(spec: PotentialSpec, parity: Parity, count: int) -> Spectrum:
    ladder = ladder_for(spec)
    eig = [ladder.eigenvalue(2 * n + parity.offset) for n in range(count)]
    return Spectrum(
        parity=parity,
        eigenvalues=eig,
        node_counts=list(range(count)),
        residuals=[0.0] * count,
        tolerances={"method": "analytic"},
        potential=spec.label,
    )


def _initial_ceiling(spec: PotentialSpec, parity: Parity, count: int) -> float:
    # one rung above the highest state requested
    m = 2 * count + parity.offset
    try:
        return 1.1 * ladder_for(spec).eigenvalue(m) + 1.0
    except SolverError:
        return float(spec.value(0.0)) + 4.0 * count


def _isolate(shooter: Shooter, n: int, floor: float, ceiling: float) -> Tuple[float, float]:
    """Bracket [lo, hi] with exactly n nodes at lo and n + 1 at hi."""
    lo, hi = floor, ceiling
    for lam, shot in shooter.samples():
        if shot.nodes <= n and lam > lo:
            lo = lam
        elif shot.nodes > n and lam < hi:
            hi = lam
    for _ in range(_MAX_BISECTIONS):
        if shooter.nodes(lo) == n and shooter.nodes(hi) == n + 1:
            return lo, hi
        mid = 0.5 * (lo + hi)
        if shooter.nodes(mid) <= n:
            lo = mid
        else:
            hi = mid
    raise SolverError(f"could not isolate eigenvalue {n} between {floor:g} and {ceiling:g}")


def _prepare(spec: PotentialSpec, parity: Parity, count: int, settings: Settings) -> Tuple[Shooter, Grid]:
    ceiling = _initial_ceiling(spec, parity, count)
    for _ in range(_MAX_CEILING_DOUBLINGS):
        grid = choose_grid(
            spec,
            ceiling,
            points_per_wavelength=settings.points_per_wavelength,
            decay_action=settings.decay_action,
        )
        shooter = Shooter(spec, parity, grid)
        if shooter.nodes(ceiling) >= count:
            logger.debug(
                "%s %s: ceiling %.6g, x_max %.4g, %d steps", spec.label, parity.value, ceiling, grid.x_max, grid.steps
            )
            return shooter, grid
        ceiling = grid.lam_floor + 2.0 * (ceiling - grid.lam_floor)
    raise SolverError(f"{spec.label}: could not find {count} {parity.value} states below {ceiling:g}")


def solve_spectrum(
    spec: PotentialSpec,
    parity: Parity,
    count: int,
    settings: Optional[Settings] = None,
) -> Spectrum:
    """
    First `count` eigenvalues of the given parity by Numerov shooting.

    Each eigenvalue is isolated by node counting, refined by Brent's method and
    certified by a sign change of the boundary mismatch across a window of width
    eig_rel_tol * max(1, lambda).
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    settings = settings or Settings()
    parity = Parity(parity)
    if spec.kind is PotentialKind.BOX:
        return _box_spectrum(spec, parity, count)

    shooter, grid = _prepare(spec, parity, count, settings)
    tol = settings.eig_rel_tol
    eigenvalues: List[float] = []
    nodes: List[int] = []
    widths: List[float] = []
    for n in range(count):
        lo, hi = _isolate(shooter, n, grid.lam_floor, grid.lam_ceiling)
        lam = float(brentq(shooter.mismatch, lo, hi, xtol=0.25 * tol * max(1.0, lo), rtol=_BRENT_RTOL, maxiter=200))
        # a few ulps inside the bound so rounding of b - a cannot exceed it
        half = max(0.5 * tol * max(1.0, lam) - 4.0 * np.spacing(lam), np.spacing(lam))
        a, b = max(lo, lam - half), min(hi, lam + half)
        if (shooter.mismatch(a) < 0.0) == (shooter.mismatch(b) < 0.0):
            raise SolverError(
                f"{spec.label} {parity.value} state {n}: no sign change of the mismatch within {2.0 * half:.2e} of {lam!r}"
            )
        eigenvalues.append(lam)
        nodes.append(shooter.nodes(lo))
        widths.append(b - a)

    return Spectrum(
        parity=parity,
        eigenvalues=eigenvalues,
        node_counts=nodes,
        residuals=widths,
        tolerances={
            "method": "numerov shooting",
            "rel_tol": tol,
            "points_per_wavelength": settings.points_per_wavelength,
            "decay_action": settings.decay_action,
            **grid.as_dict(),
        },
        potential=spec.label,
    )


def merge_ladders(even: Sequence[float], odd: Sequence[float]) -> List[float]:
    out: List[float] = []
    for n in range(max(len(even), len(odd))):
        if n < len(even):
            out.append(even[n])
        if n < len(odd):
            out.append(odd[n])
    return out


def check_interlacing(even: Sequence[float], odd: Sequence[float]) -> bool:
    """lambda_0^even < lambda_0^odd < lambda_1^even < ... over the common range."""
    merged = merge_ladders(even[: len(odd) + 1], odd[: len(even)])
    return all(a < b for a, b in zip(merged, merged[1:])) and all(math.isfinite(x) for x in merged)
