from .powerlaw import (
    erf_identity_integrand,
    erf_integral_identity,
    power_law_greens,
    power_law_greens_diag,
    sum_rule_S_by_quadrature,
)
from .structure import boundary_values, greens_value, pde_residual, slope_jump
from .sum_rules import (
    compact_form_check,
    general_sum_rules,
    greens_diagonal,
    log_growth_coefficient,
    reference_sums,
    second_order_sum,
)
from .zero_energy import build_zero_energy_solutions, wronskian_drift

__all__ = [
    "boundary_values",
    "build_zero_energy_solutions",
    "compact_form_check",
    "erf_identity_integrand",
    "erf_integral_identity",
    "general_sum_rules",
    "greens_diagonal",
    "greens_value",
    "log_growth_coefficient",
    "pde_residual",
    "power_law_greens",
    "power_law_greens_diag",
    "reference_sums",
    "second_order_sum",
    "slope_jump",
    "sum_rule_S_by_quadrature",
    "wronskian_drift",
]
