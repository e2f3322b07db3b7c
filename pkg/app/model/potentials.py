# app/model/potentials.py

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from .errors import DomainError
from .params import PowerLawParams


class PotentialKind(str, Enum):
    POWER_LAW = "powerlaw"
    SHIFTED_OSCILLATOR = "sho_shifted"
    BOX = "box"
    CUSTOM = "file"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def offset(self) -> int:
        """Offset of this ladder in the merged quantum number m = 2n + offset."""
        return 0 if self is Parity.EVEN else 1


# tail fraction of a sampled potential that must be nondecreasing
_CONFINING_TAIL = 0.25


@dataclass(frozen=True)
class PotentialSpec:
    """
    A symmetric confining potential, stored on the half-line x >= 0.

    Sampled potentials are interpolated with a cubic spline inside the table and
    continued beyond it by the power law fitted to the last samples.
    """

    kind: PotentialKind
    N: Optional[float] = None
    strength: float = 1.0
    half_width: Optional[float] = None
    samples_x: Tuple[float, ...] = ()
    samples_v: Tuple[float, ...] = ()
    domain_cutoff: Optional[float] = None
    source: str = ""

    # -----------------------
    # constructors
    # -----------------------

    @classmethod
    def power_law(cls, N: float, gamma: float = 1.0, domain_cutoff: Optional[float] = None) -> "PotentialSpec":
        if not N > 0:
            raise DomainError(f"power-law exponent must be positive, got N={N!r}")
        if not gamma > 0:
            raise DomainError(f"power-law strength must be positive, got gamma={gamma!r}")
        return cls(kind=PotentialKind.POWER_LAW, N=float(N), strength=float(gamma), domain_cutoff=domain_cutoff)

    @classmethod
    def shifted_oscillator(cls, domain_cutoff: Optional[float] = None) -> "PotentialSpec":
        return cls(kind=PotentialKind.SHIFTED_OSCILLATOR, domain_cutoff=domain_cutoff)

    @classmethod
    def box(cls, half_width: float = math.pi / 2) -> "PotentialSpec":
        if not half_width > 0:
            raise DomainError(f"box half-width must be positive, got {half_width!r}")
        return cls(kind=PotentialKind.BOX, half_width=float(half_width))

    @classmethod
    def custom(
        cls,
        xs: Sequence[float],
        vs: Sequence[float],
        *,
        source: str = "",
        domain_cutoff: Optional[float] = None,
    ) -> "PotentialSpec":
        x = np.asarray(xs, dtype=float)
        v = np.asarray(vs, dtype=float)
        if x.ndim != 1 or x.shape != v.shape or x.size < 8:
            raise DomainError("sampled potential needs two equal-length columns with at least 8 rows")
        if not np.all(np.isfinite(x)) or not np.all(np.isfinite(v)):
            raise DomainError("sampled potential contains non-finite values")
        if abs(x[0]) > 1e-12:
            raise DomainError(f"sampled potential must start at x=0, starts at {x[0]!r}")
        if np.any(np.diff(x) <= 0):
            raise DomainError("sampled potential x column must be strictly ascending")
        tail = v[int(len(v) * (1.0 - _CONFINING_TAIL)):]
        if np.any(np.diff(tail) < 0) or v[-1] <= max(v[0], 0.0):
            raise DomainError("sampled potential is not confining: V must be nondecreasing and growing at the end of the table")
        spec = cls(
            kind=PotentialKind.CUSTOM,
            samples_x=tuple(float(a) for a in x),
            samples_v=tuple(float(b) for b in v),
            domain_cutoff=domain_cutoff,
            source=source,
        )
        if not spec._tail_exponent > 0:
            raise DomainError("sampled potential is not confining: fitted growth exponent at the table end is not positive")
        return spec

    # -----------------------
    # identity
    # -----------------------

    @property
    def label(self) -> str:
        if self.kind is PotentialKind.POWER_LAW:
            return self.power_law_params().label()
        if self.kind is PotentialKind.BOX:
            return f"box:half_width={self.half_width:g}"
        if self.kind is PotentialKind.CUSTOM:
            return f"file:{self.source}" if self.source else "file"
        return "sho_shifted"

    @property
    def is_power_law(self) -> bool:
        return self.kind is PotentialKind.POWER_LAW

    def power_law_params(self) -> PowerLawParams:
        if not self.is_power_law:
            raise DomainError(f"{self.label} is not a power-law potential")
        return PowerLawParams(N=float(self.N), gamma_strength=self.strength)

    @property
    def table_end(self) -> Optional[float]:
        """Largest x where the potential is known without extrapolation (None if unbounded)."""
        if self.kind is PotentialKind.CUSTOM:
            return self.samples_x[-1]
        if self.kind is PotentialKind.BOX:
            return self.half_width
        return None

    @property
    def asymptotic_exponent(self) -> float:
        """Exponent s of the large-x growth V ~ x**s."""
        if self.kind is PotentialKind.POWER_LAW:
            return float(self.N)
        if self.kind is PotentialKind.SHIFTED_OSCILLATOR:
            return 2.0
        if self.kind is PotentialKind.BOX:
            return math.inf
        return self._tail_exponent

    # -----------------------
    # evaluation
    # -----------------------

    @cached_property
    def _spline(self) -> CubicSpline:
        return CubicSpline(np.asarray(self.samples_x), np.asarray(self.samples_v))

    @cached_property
    def _tail_exponent(self) -> float:
        x = np.asarray(self.samples_x)
        v = np.asarray(self.samples_v)
        k = max(2, len(x) // 10)
        if v[-1] <= 0 or v[-k] <= 0:
            return 0.0
        return float(math.log(v[-1] / v[-k]) / math.log(x[-1] / x[-k]))

    def value(self, x):
        """V(|x|), vectorized over numpy arrays."""
        return self.derivatives(x)[0]

    def derivatives(self, x) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(V, V', V'') at |x| for x >= 0; one-sided at the origin for kinked potentials."""
        xa = np.abs(np.asarray(x, dtype=float))
        kind = self.kind
        if kind is PotentialKind.POWER_LAW:
            n, g = float(self.N), self.strength
            with np.errstate(divide="ignore", invalid="ignore"):
                v = g * xa**n
                d1 = g * n * xa ** (n - 1.0)
                d2 = g * n * (n - 1.0) * xa ** (n - 2.0)
            return v, d1, d2
        if kind is PotentialKind.SHIFTED_OSCILLATOR:
            return xa * xa + 1.0, 2.0 * xa, np.full_like(xa, 2.0)
        if kind is PotentialKind.BOX:
            inside = xa < float(self.half_width)
            zero = np.zeros_like(xa)
            return np.where(inside, 0.0, np.inf), zero, zero
        return self._sampled_derivatives(xa)

    def _sampled_derivatives(self, xa: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        sp = self._spline
        x_end = self.samples_x[-1]
        v_end = self.samples_v[-1]
        s = self._tail_exponent
        inside = xa <= x_end
        xi = np.minimum(xa, x_end)
        v_in, d1_in, d2_in = sp(xi), sp(xi, 1), sp(xi, 2)
        ratio = np.maximum(xa, x_end) / x_end
        v_out = v_end * ratio**s
        xo = np.maximum(xa, x_end)
        d1_out = s * v_out / xo
        d2_out = s * (s - 1.0) * v_out / (xo * xo)
        return (
            np.where(inside, v_in, v_out),
            np.where(inside, d1_in, d1_out),
            np.where(inside, d2_in, d2_out),
        )

    def minimum(self, x_hi: float, points: int = 2001) -> float:
        xs = np.linspace(0.0, x_hi, points)
        return float(np.min(self.value(xs)))

    def turning_point(self, lam: float) -> float:
        """Outermost x with V(x) = lam (0 if V(0) >= lam)."""
        if float(self.value(0.0)) >= lam:
            return 0.0
        if self.kind is PotentialKind.POWER_LAW:
            return (lam / self.strength) ** (1.0 / float(self.N))
        if self.kind is PotentialKind.SHIFTED_OSCILLATOR:
            return math.sqrt(max(lam - 1.0, 0.0))
        if self.kind is PotentialKind.BOX:
            return float(self.half_width)
        hi = 1.0
        while float(self.value(hi)) < lam:
            hi *= 2.0
            if hi > 1e12:
                raise DomainError(f"{self.label}: potential never reaches {lam!r}")
        # outermost crossing: scan down from hi for the last sign change
        xs = np.linspace(0.0, hi, 4001)
        above = self.value(xs) >= lam
        idx = int(np.flatnonzero(~above)[-1])
        return float(brentq(lambda t: float(self.value(t)) - lam, xs[idx], xs[idx + 1]))
