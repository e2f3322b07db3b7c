# app/model/tables.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class AiryZeroTable:
    # magnitudes of the zeros of Ai and Ai', ascending
    ai_zeros: List[float] = field(default_factory=list)
    ai_prime_zeros: List[float] = field(default_factory=list)

    def is_interlaced(self) -> bool:
        a, d = self.ai_zeros, self.ai_prime_zeros
        for n in range(min(len(a), len(d))):
            if not d[n] < a[n]:
                return False
            if n + 1 < len(d) and not a[n] < d[n + 1]:
                return False
        return True

    def ladder(self) -> List[float]:
        """Merged spectrum of V = |x|: lambda_{2n} = a'_{n+1}, lambda_{2n+1} = a_{n+1}."""
        out: List[float] = []
        for d, a in zip(self.ai_prime_zeros, self.ai_zeros):
            out.extend((d, a))
        return out

    @classmethod
    def csv_header(cls) -> List[str]:
        return ["n", "parity", "zero"]

    def rows(self) -> List[Dict[str, Any]]:
        out: List[Dict[str, Any]] = []
        for n, (d, a) in enumerate(zip(self.ai_prime_zeros, self.ai_zeros)):
            out.append({"n": n, "parity": "even", "zero": repr(d)})
            out.append({"n": n, "parity": "odd", "zero": repr(a)})
        return out
