# app/model/cases.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Quantity:
    name: str
    expected: float
    got: Optional[float]
    tol: float
    provenance: str
    # set when the computation raised instead of producing a value
    error: str = ""

    @property
    def passed(self) -> bool:
        if self.got is None or self.error:
            return False
        return abs(self.got - self.expected) <= self.tol

    def to_json_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "name": self.name,
            "expected": self.expected,
            "got": self.got,
            "tol": self.tol,
            "provenance": self.provenance,
            "pass": self.passed,
        }
        if self.error:
            d["error"] = self.error
        return d


@dataclass
class VerificationCase:
    id: str
    quantities: List[Quantity] = field(default_factory=list)
    # case-level failure (the pipeline itself raised)
    error: str = ""

    @property
    def passed(self) -> bool:
        return not self.error and bool(self.quantities) and all(q.passed for q in self.quantities)

    def failures(self) -> List[Quantity]:
        return [q for q in self.quantities if not q.passed]

    def to_json_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "case": self.id,
            "quantities": [q.to_json_dict() for q in self.quantities],
            "pass": self.passed,
        }
        if self.error:
            d["error"] = self.error
        return d

    @classmethod
    def csv_header(cls) -> List[str]:
        return ["case", "name", "expected", "got", "tol", "provenance", "pass"]

    def rows(self) -> List[Dict[str, Any]]:
        return [
            {
                "case": self.id,
                "name": q.name,
                "expected": repr(q.expected),
                "got": "" if q.got is None else repr(q.got),
                "tol": repr(q.tol),
                "provenance": q.provenance,
                "pass": "true" if q.passed else "false",
            }
            for q in self.quantities
        ]
