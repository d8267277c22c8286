"""
Quotient machinery for the Pansu-conditional Pleijel bounds.

Under Pansu's conjecture γ(ℍₘ) ≤ γ(ℝ^{2m+2})·αₘ·γ̃ₘ. Each factor's
consecutive quotient is bounded separately; their product staying below 1
for m ≥ 34 shows the bound decreases from there on.
"""

import math
from dataclasses import dataclass
from typing import Optional

from src.core.value import Value, exact, exp, log
from src.functional.sobolev import sobolev_heisenberg
from src.isoperimetry.constants import iso_euclidean, pansu_isoperimetric
from src.pleijel.gamma import gamma_euclidean, gamma_tilde
from src.specfun.bessel import MAX_ZERO_ORDER, bessel_first_zero
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import SingularityError
from src.utils.validators import validate_int_range, validate_range
from src.weyl.cn import MAX_SERIES_N

MAX_ALPHA_M = 10 ** 4
ALPHA_QUOTIENT_CEILING = math.e ** 2 / 4.0
SMALL_M_LIMIT = 33

_LOG_FOUR_PI = math.log(4.0 * math.pi)


def alpha(m: int) -> Value:
    """αₘ = √(4π)((2m+1)/4)^{2m+2}/((m+1)!Γ((2m+3)/2))."""
    m = validate_int_range(m, 1, MAX_ALPHA_M, 'm')
    log_algebraic = 0.5 * _LOG_FOUR_PI + (2 * m + 2) * math.log((2 * m + 1) / 4.0)
    return exp(exact(log_algebraic) - ln_gamma(m + 2.0) - ln_gamma((2 * m + 3) / 2.0))


def alpha_direct(m: int) -> Value:
    """αₘ = (I(ℝ^{2m+2})/I^P(ℍₘ))^{2m+2}·C^Sob(ℍₘ)^{m+1}·(4π)^{−m−1}·Γ(m+2)⁻¹."""
    m = validate_int_range(m, 1, 50, 'm')
    Q = 2 * m + 2
    ratio = iso_euclidean(Q) / pansu_isoperimetric(m).value
    return exp(log(ratio) * float(Q) + log(sobolev_heisenberg(m)) * float(m + 1)
               - (m + 1) * _LOG_FOUR_PI - ln_gamma(m + 2.0))


def alpha_quotient(m: int) -> Value:
    """αₘ/αₘ₋₁ = (1/4)((m+½)/(m+1))(1+1/(m−½))^{2m}."""
    m = validate_int_range(m, 2, MAX_ALPHA_M, 'm')
    return exact(0.25 * (m + 0.5) / (m + 1.0) * math.exp(2.0 * m * math.log1p(1.0 / (m - 0.5))))


def alpha_quotient_epsilon_polynomial(epsilon: float) -> float:
    """−4 − ε + 12ε² + 9ε³; non-positive on (0, ½]."""
    epsilon = validate_range(epsilon, 0.0, None, 'epsilon')
    return -4.0 - epsilon + 12.0 * epsilon ** 2 + 9.0 * epsilon ** 3


def gamma_rd_quotient(m: int) -> Value:
    """γ(ℝ^{2m+2})/γ(ℝ^{2m}) = 4(m+1)²/j_{m,1}²·(j_{m−1,1}/j_{m,1})^{2m}."""
    m = validate_int_range(m, 1, int(MAX_ZERO_ORDER), 'm')
    j_prev = bessel_first_zero(m - 1.0)
    j = bessel_first_zero(float(m))
    return exp(exact(math.log(4.0 * (m + 1) ** 2)) - log(j) * 2.0 + log(j_prev / j) * float(2 * m))


def pansu_step_quotient(m: int) -> Value:
    """
    γ(ℝ^{2m+2})/γ(ℝ^{2m})·αₘ/αₘ₋₁ for 2 ≤ m ≤ 33.

    Below 1 and increasing in m on this range; together with γ̃ₘ/γ̃ₘ₋₁ < 1 it
    carries the base case γ(ℝ⁴)α₁γ̃₁ < 1 up to m = 34.
    """
    m = validate_int_range(m, 2, SMALL_M_LIMIT, 'm')
    return gamma_rd_quotient(m) * alpha_quotient(m)


def _radical(m: int) -> float:
    return math.exp(2.0 * (1.0 - 1.0 / (math.sqrt(1.0 + 1.0 / m) + 1.0 / math.sqrt(m))))


def gamma_rd_quotient_upper(m: int) -> Value:
    """4e⁻²((m+1)/(m+5))·exp(2(1 − 1/(√(1+1/m)+1/√m)))."""
    m = validate_int_range(m, 1, None, 'm')
    return exact(4.0 * math.exp(-2.0) * (m + 1.0) / (m + 5.0) * _radical(m))


def gamma_tilde_quotient_denominator(m: int) -> float:
    """e^{−1/(2(m−1))} − e/m."""
    m = validate_int_range(m, 2, None, 'm')
    return math.exp(-1.0 / (2.0 * (m - 1))) - math.e / m


def gamma_tilde_quotient_upper(m: int) -> Value:
    """
    γ̃ₘ/γ̃ₘ₋₁ ≤ 2e⁻¹(e^{−1/(2(m−1))} − e/m)⁻¹.

    Raises:
        SingularityError: If the denominator is not positive (m ≤ 3)
    """
    denominator = gamma_tilde_quotient_denominator(m)
    if denominator <= 0:
        raise SingularityError(
            f"e^(-1/(2(m-1))) - e/m = {denominator:.6g} is not positive for m = {m}",
            {'m': m, 'denominator': denominator},
        )
    return exact(2.0 / math.e / denominator)


def combined_quotient_upper(m: int) -> Value:
    """
    2e⁻¹·((m+1)/(m+5))·exp(2(1 − 1/(√(1+1/m)+1/√m)))·(e^{−1/(2(m−1))} − e/m)⁻¹.

    Equals (e²/4)·gamma_rd_quotient_upper(m)·gamma_tilde_quotient_upper(m).
    """
    denominator = gamma_tilde_quotient_denominator(m)
    if denominator <= 0:
        raise SingularityError(f"Combined quotient bound is singular for m = {m}", {'m': m})
    return exact(2.0 / math.e * (m + 1.0) / (m + 5.0) * _radical(m) / denominator)


def pansu_threshold_constant() -> float:
    """((1 − ln 2.108)/2)⁻²."""
    return ((1.0 - math.log(2.108)) / 2.0) ** -2


def bessel_zero_ratio_bound(m: int) -> float:
    """exp(−1/(√m(√(m+1)+1))), an upper bound on j_{m−1,1}/j_{m,1}."""
    m = validate_int_range(m, 1, None, 'm')
    return math.exp(-1.0 / (math.sqrt(m) * (math.sqrt(m + 1.0) + 1.0)))


def pansu_base_product() -> Value:
    """γ(ℝ⁴)·α₁·γ̃₁ = 2⁵3³/(j₁,₁⁴π²), the Pansu bound on γ(ℍ₁) assembled from its factors."""
    return gamma_euclidean(4) * alpha(1) * gamma_tilde(1)


def pansu_base_product_closed_form() -> Value:
    j = bessel_first_zero(1.0)
    return exp(exact(math.log(2.0 ** 5 * 3.0 ** 3 / math.pi ** 2)) - log(j) * 4.0)


@dataclass(frozen=True)
class QuotientSuiteRow:
    """
    Consecutive quotients of the factors of the Pansu bound at index m.

    The γ̃ quotient bound and the combined bound are None when singular (m ≤ 3).
    """

    m: int
    alpha_quotient: Value
    gamma_rd_quotient: Value
    gamma_rd_quotient_upper: Value
    gamma_tilde_quotient_upper: Optional[Value]
    combined_upper: Optional[Value]
    gamma_tilde_quotient_direct: Optional[Value] = None

    @property
    def singular(self) -> bool:
        return self.combined_upper is None


def pansu_quotient_suite(m: int) -> QuotientSuiteRow:
    """All quotient quantities at m, 2 ≤ m ≤ 200."""
    m = validate_int_range(m, 2, int(MAX_ZERO_ORDER), 'm')
    try:
        tilde_upper = gamma_tilde_quotient_upper(m)
        combined = combined_quotient_upper(m)
    except SingularityError:
        tilde_upper = combined = None

    direct = None
    if m <= MAX_SERIES_N:
        direct = gamma_tilde(m) / gamma_tilde(m - 1)

    return QuotientSuiteRow(
        m=m,
        alpha_quotient=alpha_quotient(m),
        gamma_rd_quotient=gamma_rd_quotient(m),
        gamma_rd_quotient_upper=gamma_rd_quotient_upper(m),
        gamma_tilde_quotient_upper=tilde_upper,
        combined_upper=combined,
        gamma_tilde_quotient_direct=direct,
    )
