"""Pleijel constants γ = (C^FK)^{−Q/2}·W⁻¹ and the γ̃ₙ family"""

import math

from src.core.bound import Bound, Direction, Quantity
from src.core.value import Value, exact, exp, log
from src.functional.sobolev import sobolev_heisenberg_bound
from src.specfun.bessel import bessel_first_zero
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import DomainError
from src.utils.logger import get_logger
from src.utils.validators import validate_int_range, validate_range
from src.weyl.cn import MAX_SERIES_N, cn_hurwitz

logger = get_logger('pleijel.gamma')

MAX_EUCLIDEAN_D = 400

_LOG_TWO = math.log(2.0)


def gamma_from(fk: Bound, w: Value, Q: float) -> Bound:
    """
    Upper bound γ ≤ (C^FK)^{−Q/2}·W⁻¹ from a lower Faber–Krahn bound.

    Args:
        fk: Lower or exact bound on C^FK
        w: Weyl constant of the same group
        Q: Homogeneous dimension

    Returns:
        Upper bound on the Pleijel constant, hypothesis inherited from fk

    Raises:
        DirectionError: If fk is an upper bound
        DomainError: If w is not positive
    """
    Q = validate_range(Q, 0.0, None, 'Q', min_inclusive=False)
    fk.require(Quantity.FK_CONST, Q=Q)
    if w.estimate <= 0:
        raise DomainError("The Weyl constant must be positive", {'w': w.estimate})
    value = exp(log(fk.value) * (-0.5 * Q)) / w
    return fk.derive(Quantity.PLEIJEL_CONST, value, 'gamma_from', decreasing=True, relation=Direction.UPPER)


def gamma_tilde(n: int) -> Value:
    """γ̃ₙ = 2ⁿ(n+1)!/n^{2(n+1)}·cₙ⁻¹, the Jerison–Lee route on ℍₙ."""
    n = validate_int_range(n, 1, MAX_SERIES_N, 'n')
    prefactor = exp(exact(n * _LOG_TWO - 2.0 * (n + 1) * math.log(n)) + ln_gamma(n + 2.0))
    return prefactor / cn_hurwitz(n)


def gamma_tilde_bound(n: int) -> Bound:
    return sobolev_heisenberg_bound(n).derive(
        Quantity.PLEIJEL_CONST, gamma_tilde(n), 'gamma_tilde', decreasing=True, relation=Direction.UPPER,
    )


def gamma_tilde_quotient(n: int) -> Value:
    """γ̃ₙ/γ̃ₙ₋₁ = (2(n+1)/n²)(1−1/n)^{2n}·cₙ₋₁/cₙ."""
    n = validate_int_range(n, 2, MAX_SERIES_N, 'n')
    prefactor = exact(2.0 * (n + 1) / (n * n) * math.exp(2.0 * n * math.log1p(-1.0 / n)))
    return prefactor * cn_hurwitz(n - 1) / cn_hurwitz(n)


def gamma_euclidean(d: int) -> Value:
    """γ(ℝᵈ) = 2ᵈ·j_{d/2−1,1}^{−d}·Γ(d/2+1)²."""
    d = validate_int_range(d, 2, MAX_EUCLIDEAN_D, 'd')
    j = bessel_first_zero(d / 2.0 - 1.0)
    return exp(exact(d * _LOG_TWO) - log(j) * float(d) + ln_gamma(d / 2.0 + 1.0) * 2.0)


def gamma_euclidean_ratio(d: int) -> Value:
    """γ(ℝ^{d+1})/γ(ℝᵈ)."""
    return gamma_euclidean(d + 1) / gamma_euclidean(d)
