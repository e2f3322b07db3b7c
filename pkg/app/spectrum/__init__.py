from .ladders import Ladder, ladder_for
from .shooting import check_interlacing, merge_ladders, solve_spectrum
from .sums import (
    alternating_sum_accelerated,
    assemble_report,
    closed_form_reference,
    partial_inverse_sum,
    spec_difference_tail,
    spec_tail,
    wkb_tail,
)

__all__ = [
    "Ladder",
    "alternating_sum_accelerated",
    "assemble_report",
    "check_interlacing",
    "closed_form_reference",
    "ladder_for",
    "merge_ladders",
    "partial_inverse_sum",
    "solve_spectrum",
    "spec_difference_tail",
    "spec_tail",
    "wkb_tail",
]
