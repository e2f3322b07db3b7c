from __future__ import annotations

from typing import Optional


class SumRuleError(Exception):
    """Base class for every error raised by the package."""


class DomainError(SumRuleError, ValueError):
    """Argument outside the domain where a formula or solver is valid."""


class UsageError(SumRuleError):
    """Bad command-line input, unknown case id or malformed config/spec string."""


class SolverError(SumRuleError):
    """An iterative solver did not converge or could not certify its result."""


class DivergentSumError(SumRuleError):
    def __init__(self, quantity: str, reason: str) -> None:
        super().__init__(f"{quantity} diverges: {reason}")
        self.quantity = quantity
        self.reason = reason


class QuadratureError(SumRuleError):
    def __init__(self, message: str, estimate: float, error_bound: Optional[float] = None) -> None:
        super().__init__(f"{message} (estimate={estimate!r}, error bound={error_bound!r})")
        self.estimate = estimate
        self.error_bound = error_bound
