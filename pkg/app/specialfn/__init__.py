from .airy import airy_ai, airy_ai_prime, airy_pair, airy_zero, airy_zero_table
from .bessel import bessel_i, bessel_i_scaled, bessel_k, bessel_k_scaled
from .errorfn import erf, erfc, erfcx
from .gammafn import gamma, ln_gamma

__all__ = [
    "airy_ai",
    "airy_ai_prime",
    "airy_pair",
    "airy_zero",
    "airy_zero_table",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_k",
    "bessel_k_scaled",
    "erf",
    "erfc",
    "erfcx",
    "gamma",
    "ln_gamma",
]
