# app/config.py

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .model.errors import UsageError


@dataclass(frozen=True)
class Settings:
    # power-law case selection
    N: float = 3.0
    gamma: float = 1.0
    # exact terms per ladder and sum order
    terms: int = 10
    order: int = 1
    # quadrature / eigenvalue tolerances
    quad_rel_tol: float = 1e-10
    eig_rel_tol: float = 1e-10
    # shooting grid
    points_per_wavelength: int = 400
    decay_action: float = 20.0
    # zero-energy grid
    greens_action: float = 40.0
    greens_points: int = 4001
    # potential used by the default general case
    general_potential: str = "powerlaw:N=4"
    jobs: int = 1

    def merged(self, **overrides: Any) -> "Settings":
        """Copy with every non-None override applied (CLI flags win over the file)."""
        clean = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(clean) - {f.name for f in fields(self)}
        if unknown:
            raise UsageError(f"unknown setting(s): {', '.join(sorted(unknown))}")
        s = replace(self, **clean)
        s.validate()
        return s

    def validate(self) -> None:
        if self.terms < 1:
            raise UsageError(f"terms must be >= 1, got {self.terms}")
        if self.order < 1:
            raise UsageError(f"order must be >= 1, got {self.order}")
        if self.points_per_wavelength < 40:
            raise UsageError(f"points_per_wavelength must be >= 40, got {self.points_per_wavelength}")
        if self.greens_points < 101 or self.greens_points % 2 == 0:
            raise UsageError(f"greens_points must be odd and >= 101, got {self.greens_points}")
        if not (0 < self.quad_rel_tol < 1e-3 and 0 < self.eig_rel_tol < 1e-3):
            raise UsageError("tolerances must lie in (0, 1e-3)")
        if self.jobs < 1:
            raise UsageError(f"jobs must be >= 1, got {self.jobs}")


def _coerce(name: str, raw: str, lineno: int, path: Path) -> Any:
    kinds: Dict[str, type] = {f.name: type(getattr(Settings(), f.name)) for f in fields(Settings)}
    if name not in kinds:
        raise UsageError(f"{path}:{lineno}: unknown key {name!r}")
    kind = kinds[name]
    try:
        if kind is int:
            return int(raw)
        if kind is float:
            return float(raw)
        return raw
    except ValueError:
        raise UsageError(f"{path}:{lineno}: cannot read {name}={raw!r} as {kind.__name__}") from None


def load_settings(path: Optional[Path], base: Optional[Settings] = None) -> Settings:
    """Read a `key = value` file on top of `base` (defaults when None)."""
    settings = base or Settings()
    if path is None:
        return settings
    if not path.exists():
        raise UsageError(f"config file not found: {path}")

    values: Dict[str, Any] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, raw = (part.strip() for part in line.split("=", 1))
        values[key] = _coerce(key, raw, lineno, path)
    return settings.merged(**values)
