# app/model/solutions.py

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .errors import DivergentSumError
from .potentials import PotentialSpec


@dataclass(eq=False)
class ZeroEnergySolution:
    """
    Sampled solution of psi'' = V psi on [0, x_max].

    `init` is (value, slope) at the origin. `running_norm` holds the cumulative
    integral of psi**2 from 0 when the solution was integrated outward.
    """

    label: str
    grid: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray
    init: Tuple[float, float]
    potential: PotentialSpec
    decay_coefficient: Optional[float] = None
    running_norm: Optional[np.ndarray] = None
    # domain ends at an infinite wall (box): no tail beyond the grid
    hard_wall: bool = False

    @property
    def x_max(self) -> float:
        return float(self.grid[-1])

    @cached_property
    def _interp(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.grid, self.values, self.derivatives)

    def at(self, x) -> np.ndarray:
        return self._interp(x)

    def slope_at(self, x) -> np.ndarray:
        return self._interp(x, 1)


@dataclass
class GreensDiagonal:
    grid: np.ndarray
    g1_diag: np.ndarray
    g2_diag: np.ndarray
    difference: np.ndarray

    @classmethod
    def csv_header(cls) -> List[str]:
        return ["x", "g1", "g2", "difference"]

    def rows(self) -> List[Dict[str, Any]]:
        return [
            {"x": repr(float(x)), "g1": repr(float(a)), "g2": repr(float(b)), "difference": repr(float(d))}
            for x, a, b, d in zip(self.grid, self.g1_diag, self.g2_diag, self.difference)
        ]


@dataclass
class SumRuleIntegrals:
    """Diagonal Green's-function integrals; S1/S2 are None when divergent."""

    S1: Optional[float]
    S2: Optional[float]
    S: float
    c: float
    errors: Dict[str, float] = field(default_factory=dict)
    divergent: Dict[str, bool] = field(default_factory=dict)
    # fitted decay exponent of each diagonal integrand near the grid end
    decay_exponents: Dict[str, float] = field(default_factory=dict)
    # coefficient of log x in the running integral of each diagonal integrand
    log_growth: Dict[str, float] = field(default_factory=dict)

    def require(self, name: str) -> float:
        value = getattr(self, name)
        if value is None:
            raise DivergentSumError(name, "running integral of the diagonal grows like log x")
        return float(value)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "S1": self.S1,
            "S2": self.S2,
            "S": self.S,
            "c": self.c,
            "errors": dict(self.errors),
            "divergent": dict(self.divergent),
            "decay_exponents": dict(self.decay_exponents),
            "log_growth": dict(self.log_growth),
        }
