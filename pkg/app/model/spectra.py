# app/model/spectra.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .potentials import Parity


@dataclass
class Spectrum:
    parity: Parity
    eigenvalues: List[float]
    # per-eigenvalue certified node count
    node_counts: List[int] = field(default_factory=list)
    # per-eigenvalue width of the window over which the shooting mismatch changes sign
    residuals: List[float] = field(default_factory=list)
    # convergence metadata: rel_tol, x_max, step, points_per_wavelength, method
    tolerances: Dict[str, Any] = field(default_factory=dict)
    potential: str = ""

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @classmethod
    def csv_header(cls) -> List[str]:
        return ["parity", "n", "lambda", "nodes", "residual"]

    def rows(self) -> List[Dict[str, Any]]:
        out: List[Dict[str, Any]] = []
        for n, lam in enumerate(self.eigenvalues):
            out.append(
                {
                    "parity": self.parity.value,
                    "n": n,
                    "lambda": repr(float(lam)),
                    "nodes": self.node_counts[n] if n < len(self.node_counts) else "",
                    "residual": repr(float(self.residuals[n])) if n < len(self.residuals) else "",
                }
            )
        return out


@dataclass
class SumRuleReport:
    order: int
    partial_S1: float
    partial_S2: float
    # None when the ladder tail diverges at this order
    tail_S1: Optional[float]
    tail_S2: Optional[float]
    S_estimate: float
    closed_form_ref: Optional[float] = None
    abs_error: Optional[float] = None

    # not exported
    terms: int = 0
    potential: str = ""
    method: str = "ladder tails"

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "partial_S1": self.partial_S1,
            "partial_S2": self.partial_S2,
            "tail_S1": self.tail_S1,
            "tail_S2": self.tail_S2,
            "S_estimate": self.S_estimate,
            "closed_form_ref": self.closed_form_ref,
            "abs_error": self.abs_error,
        }
