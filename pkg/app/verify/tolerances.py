# app/verify/tolerances.py
#
# Fixed tolerance table for the verification cases. Bump TABLE_VERSION whenever a
# value changes so archived reports stay comparable.

from __future__ import annotations

from typing import Dict

TABLE_VERSION = "2"

TOLERANCES: Dict[str, float] = {
    # printed to 5 decimals
    "airy.zero": 5e-6,
    "airy.shooting": 1e-5,
    "airy.partial": 1e-3,
    "airy.tail": 1e-3,
    "airy.estimate": 2e-3,
    "airy.consistent": 1e-3,
    "closed_form": 1e-8,
    "identity": 1e-12,
    "sho.accelerated": 1e-3,
    "flag": 0.0,
    "sho_shifted.eigen": 1e-8,
    "sho_shifted.sum": 1e-8,
    "report.accelerated": 1e-5,
    "compact": 1e-6,
    "quartic.eigen_rel": 1e-5,
    "quartic.partial": 1e-5,
    "quartic.report": 5e-4,
    "quartic.closed": 1e-5,
    "quartic.second_order": 1e-4,
    "box.exact": 1e-12,
    "box.limit": 1e-4,
    "box.second_order": 1e-6,
    "box.greens": 1e-10,
    "box.report": 1e-3,
    "powerlaw.report": 2e-3,
    "greens.sum": 1e-6,
    "greens.jump": 1e-6,
    "greens.boundary": 1e-8,
    "greens.wronskian": 1e-8,
    "greens.pde": 1e-5,
    "general.report": 1e-3,
}


def tol(key: str) -> float:
    return TOLERANCES[key]
