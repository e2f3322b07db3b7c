# app/powerlaw/closed_forms.py

from __future__ import annotations

import logging
import math

from scipy.special import zeta

from ..model.errors import DivergentSumError, DomainError
from ..model.params import ClosedFormSums, PowerLawParams
from ..specialfn import gammafn

logger = logging.getLogger(__name__)

# closed forms are only exercised up to this beta (N >= 2/9)
BETA_GUARANTEED = 0.45


def derive_params(N: float, gamma_strength: float = 1.0) -> PowerLawParams:
    if not N > 0 or math.isinf(N):
        raise DomainError(f"N must be positive and finite for a confining power law, got {N!r}")
    if not gamma_strength > 0 or math.isinf(gamma_strength):
        raise DomainError(f"gamma_strength must be positive and finite, got {gamma_strength!r}")
    return PowerLawParams(N=float(N), gamma_strength=float(gamma_strength))


def _beta(params: PowerLawParams) -> float:
    b = params.beta
    if not 0.0 < b < 0.5:
        raise DomainError(f"beta={b!r} outside (0, 1/2)")
    if b > BETA_GUARANTEED:
        logger.warning("beta=%.4f exceeds %.2f; closed forms are untested this close to N=0", b, BETA_GUARANTEED)
    return b


def _divergent(params: PowerLawParams, name: str) -> DivergentSumError:
    return DivergentSumError(
        name,
        f"N={params.N:g} <= 2: WKB eigenvalues grow as n^{params.wkb_exponent:.4g}, exponent 2N/(N+2) <= 1",
    )


def closed_form_S(params: PowerLawParams, form: str = "compact") -> float:
    """
    Alternating sum over all states, sum (-1)^n / lambda_n.

    form="compact" is the gamma ratio after the reflection identity;
    form="reflected" is the gamma/sine product it was derived from.
    """
    b = _beta(params)
    g = gammafn.gamma
    prefactor = b ** (2.0 - 4.0 * b) * params.sum_scale
    if form == "compact":
        return prefactor * g(3 * b) * g(2 * b) ** 2 / (g(4 * b) * g(1.0 - b))
    if form == "reflected":
        return prefactor * g(3 * b) * g(2 * b) ** 2 * g(b) / g(4 * b) * math.sin(math.pi * b) / math.pi
    raise DomainError(f"unknown closed-form variant {form!r}")


def closed_form_S1(params: PowerLawParams, form: str = "compact") -> float:
    """Odd-state sum sum 1/lambda_{2n+1}; needs N > 2."""
    if params.N <= 2.0:
        raise _divergent(params, "S1")
    b = _beta(params)
    if form == "compact":
        return closed_form_S(params) / (2.0 * math.cos(2.0 * math.pi * b))
    if form == "gamma":
        g = gammafn.gamma
        return (
            b ** (2.0 - 4.0 * b)
            * params.sum_scale
            * g(3 * b) * g(2 * b) * g(1.0 - 4 * b)
            / (g(1.0 - 2 * b) * g(1.0 - b))
        )
    raise DomainError(f"unknown closed-form variant {form!r}")


def closed_form_S2(params: PowerLawParams, form: str = "compact") -> float:
    """Even-state sum sum 1/lambda_{2n}; needs N > 2."""
    if params.N <= 2.0:
        raise _divergent(params, "S2")
    b = _beta(params)
    if form == "compact":
        pb = math.pi * b
        return closed_form_S(params) * math.sin(3.0 * pb) / (math.sin(pb) * 2.0 * math.cos(2.0 * pb))
    if form == "gamma":
        g = gammafn.gamma
        return (
            b ** (2.0 - 4.0 * b)
            * params.sum_scale
            * g(2 * b) * g(b) * g(1.0 - 4 * b)
            / (g(1.0 - 3 * b) * g(1.0 - 2 * b))
        )
    raise DomainError(f"unknown closed-form variant {form!r}")


def closed_form_sums(params: PowerLawParams) -> ClosedFormSums:
    out = ClosedFormSums(S=closed_form_S(params))
    if params.N > 2.0:
        out.S1 = closed_form_S1(params)
        out.S2 = closed_form_S2(params)
    else:
        out.divergent["S1"] = out.divergent["S2"] = True
    return out


def box_scaled_S(beta: float) -> float:
    """
    Alternating sum for the rescaled potential (2|x|/pi)^N written directly in beta.

    Tends to pi^2/12 as beta -> 0; evaluating through a strength of (2/pi)^N would underflow.
    """
    b = float(beta)
    if not 0.0 < b < 0.5:
        raise DomainError(f"beta={b!r} outside (0, 1/2)")
    g = gammafn.gamma
    return (0.5 * math.pi * b) ** (2.0 - 4.0 * b) * g(3 * b) * g(2 * b) ** 2 / (g(4 * b) * g(1.0 - b))


def box_limit_sums() -> ClosedFormSums:
    """Sums for the box of half-width pi/2 (eigenvalues (m+1)^2)."""
    pi2 = math.pi * math.pi
    return ClosedFormSums(S=pi2 / 12.0, S1=pi2 / 24.0, S2=pi2 / 8.0)


def box_sums(half_width: float = math.pi / 2, p: int = 1) -> ClosedFormSums:
    """Order-p sums for a box of arbitrary half-width via zeta(2p)."""
    if not half_width > 0:
        raise DomainError(f"half-width must be positive, got {half_width!r}")
    if p < 1:
        raise DomainError(f"order must be >= 1, got {p}")
    scale = (2.0 * half_width / math.pi) ** (2 * p)
    z = float(zeta(2 * p))
    s1 = scale * 2.0 ** (-2 * p) * z
    s2 = scale * (1.0 - 2.0 ** (-2 * p)) * z
    return ClosedFormSums(S=s2 - s1, S1=s1, S2=s2)
