from .closed_forms import (
    box_limit_sums,
    box_scaled_S,
    box_sums,
    closed_form_S,
    closed_form_S1,
    closed_form_S2,
    closed_form_sums,
    derive_params,
)
from .wkb import ladder_tail, wkb_constant, wkb_difference_tail, wkb_eigenvalue

__all__ = [
    "box_limit_sums",
    "box_scaled_S",
    "box_sums",
    "closed_form_S",
    "closed_form_S1",
    "closed_form_S2",
    "closed_form_sums",
    "derive_params",
    "ladder_tail",
    "wkb_constant",
    "wkb_difference_tail",
    "wkb_eigenvalue",
]
