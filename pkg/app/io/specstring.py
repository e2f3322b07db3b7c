# app/io/specstring.py
#
#   powerlaw:N=<real>[,gamma=<real>] | sho_shifted | box:half_width=<real> | file:<path>

from __future__ import annotations

import math
from pathlib import Path
from typing import Dict, Optional

from ..model.errors import DomainError, UsageError
from ..model.potentials import PotentialSpec
from .csvio import read_samples


def _fields(body: str, allowed: set, text: str) -> Dict[str, float]:
    out: Dict[str, float] = {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        key, sep, raw = part.partition("=")
        key = key.strip()
        if not sep or key not in allowed:
            raise UsageError(f"bad potential {text!r}: unexpected field {part!r} (allowed: {', '.join(sorted(allowed))})")
        if key in out:
            raise UsageError(f"bad potential {text!r}: {key} given twice")
        try:
            value = float(raw)
        except ValueError:
            raise UsageError(f"bad potential {text!r}: {key}={raw!r} is not a number") from None
        if not math.isfinite(value):
            raise UsageError(f"bad potential {text!r}: {key} must be finite")
        out[key] = value
    return out


def parse_potential(text: str, domain_cutoff: Optional[float] = None) -> PotentialSpec:
    """Parse a potential spec-string into a PotentialSpec."""
    raw = (text or "").strip()
    kind, _, body = raw.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "powerlaw":
            f = _fields(body, {"N", "gamma"}, raw)
            if "N" not in f:
                raise UsageError(f"bad potential {raw!r}: powerlaw needs N=<real>")
            return PotentialSpec.power_law(f["N"], f.get("gamma", 1.0), domain_cutoff=domain_cutoff)
        if kind == "sho_shifted":
            if body.strip():
                raise UsageError(f"bad potential {raw!r}: sho_shifted takes no parameters")
            return PotentialSpec.shifted_oscillator(domain_cutoff=domain_cutoff)
        if kind == "box":
            f = _fields(body, {"half_width"}, raw)
            return PotentialSpec.box(f.get("half_width", math.pi / 2))
        if kind == "file":
            if not body.strip():
                raise UsageError(f"bad potential {raw!r}: file needs a path")
            path = Path(body.strip())
            xs, vs = read_samples(path)
            return PotentialSpec.custom(xs, vs, source=str(path), domain_cutoff=domain_cutoff)
    except DomainError as e:
        raise UsageError(f"bad potential {raw!r}: {e}") from e
    raise UsageError(f"unknown potential {raw!r}; expected powerlaw:N=..., sho_shifted, box:half_width=... or file:<path>")
