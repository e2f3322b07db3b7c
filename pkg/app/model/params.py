# app/model/params.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional


@dataclass(frozen=True)
class PowerLawParams:
    """Exponent and strength of V(x) = gamma_strength * |x|**N, with the derived Bessel indices."""

    N: float
    gamma_strength: float = 1.0

    @property
    def nu(self) -> float:
        return 2.0 / (self.N + 2.0)

    @property
    def beta(self) -> float:
        return 1.0 / (self.N + 2.0)

    @property
    def sum_scale(self) -> float:
        # inverse eigenvalues scale as gamma^(-2/(N+2))
        return self.gamma_strength ** (-self.nu)

    @property
    def length_scale(self) -> float:
        return self.gamma_strength ** (1.0 / (self.N + 2.0))

    @property
    def wkb_exponent(self) -> float:
        """Growth exponent 2N/(N+2) of the eigenvalue ladder."""
        return 2.0 * self.N / (self.N + 2.0)

    def label(self) -> str:
        if self.gamma_strength == 1.0:
            return f"powerlaw:N={self.N:g}"
        return f"powerlaw:N={self.N:g},gamma={self.gamma_strength:g}"


@dataclass
class ClosedFormSums:
    # alternating sum over all states
    S: float
    # odd / even ladders; None when divergent
    S1: Optional[float] = None
    S2: Optional[float] = None
    divergent: Dict[str, bool] = field(default_factory=lambda: {"S": False, "S1": False, "S2": False})

    def as_dict(self) -> Dict[str, object]:
        return {"S": self.S, "S1": self.S1, "S2": self.S2, "divergent": dict(self.divergent)}
