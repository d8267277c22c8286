"""
Gagliardo–Nirenberg constants.

The interpolation inequality on ℝᵏ has exponent θ = k(1/2 − 1/q); on the
line the sharp constant is known in closed form, in higher dimension only
through the Sobolev constant and in the limit q → 2.
"""

import math
from dataclasses import dataclass

from src.core.value import Number, Value, as_value, exact, exp, log
from src.functional.sobolev import sobolev_euclidean
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import DomainError, RangeError
from src.utils.validators import validate_finite, validate_int_range, validate_range

MAX_Q = 1e3
_HALF_LOG_PI = 0.5 * math.log(math.pi)


def critical_exponent(k: int) -> float:
    """2k/(k−2), the Sobolev exponent on ℝᵏ (infinite for k ≤ 2)."""
    return math.inf if k <= 2 else 2.0 * k / (k - 2)


@dataclass(frozen=True)
class GNParams:
    """Exponents of the Gagliardo–Nirenberg inequality on ℝᵏ."""

    k: int
    q: float
    theta: float

    @classmethod
    def create(cls, k: int, q: float) -> 'GNParams':
        """
        Build parameters for ℝᵏ and exponent q, deriving θ = k(1/2 − 1/q).

        Raises:
            DomainError: If q ≤ 2 or q exceeds 2k/(k−2) for k ≥ 3
        """
        k = validate_int_range(k, 1, None, 'k')
        q = validate_finite(q, 'q')
        if q <= 2.0:
            raise DomainError(f"Gagliardo–Nirenberg needs q > 2, got {q}", {'q': q})
        if q > critical_exponent(k):
            raise DomainError(
                f"q must not exceed 2k/(k−2) = {critical_exponent(k)} for k = {k}",
                {'k': k, 'q': q},
            )
        return cls(k, q, k * (0.5 - 1.0 / q))

    def __post_init__(self):
        expected = self.k * (0.5 - 1.0 / self.q)
        if abs(self.theta - expected) > 1e-12 or not 0.0 <= self.theta < 1.0:
            raise DomainError("theta must equal k(1/2 − 1/q) and lie in [0, 1)", {'theta': self.theta})


def gn_nagy(q: float) -> Value:
    """
    Sharp constant on the line:
    ((q+2)^{q+2}/((q−2)^{q−2}2^{2(q+2)}))^{1/(2q)}·(√π Γ(q/(q−2))/Γ(q/(q−2)+1/2))^{(q−2)/q}.

    Raises:
        DomainError: If q ≤ 2
    """
    q = validate_finite(q, 'q')
    if q <= 2.0:
        raise DomainError(f"gn_nagy needs q > 2, got {q}", {'q': q})
    validate_range(q, 2.0, MAX_Q, 'q')

    a = q / (q - 2.0)
    algebraic = ((q + 2.0) * math.log(q + 2.0) - (q - 2.0) * math.log(q - 2.0)
                 - 2.0 * (q + 2.0) * math.log(2.0)) / (2.0 * q)
    gamma_part = (_HALF_LOG_PI + ln_gamma(a) - ln_gamma(a + 0.5)) * ((q - 2.0) / q)
    return exp(gamma_part + exact(algebraic))


def gn_nagy_Q(Q: float) -> Value:
    """
    The line constant at q = 2(Q+1)/(Q−1):
    (Q^Q/(4(Q−1)^{Q−1}))^{1/(Q+1)}·(√π Γ((Q+1)/2)/Γ((Q+2)/2))^{2/(Q+1)}.

    Raises:
        RangeError: If Q ≤ 1
    """
    Q = validate_range(Q, 1.0, None, 'Q', min_inclusive=False)
    algebraic = (Q * math.log(Q) - math.log(4.0) - (Q - 1.0) * math.log(Q - 1.0)) / (Q + 1.0)
    gamma_part = (_HALF_LOG_PI + ln_gamma((Q + 1.0) / 2.0) - ln_gamma((Q + 2.0) / 2.0)) * (2.0 / (Q + 1.0))
    return exp(gamma_part + exact(algebraic))


def gn_sobolev_exponent(k: int, q: float) -> float:
    """k(q−2)/(2q): 0 at q = 2, 1 at q = 2k/(k−2)."""
    return k * (q - 2.0) / (2.0 * q)


def gn_from_sobolev(k: int, q: float) -> Value:
    """
    Lower bound C^GN_q(ℝᵏ) ≥ C^Sob(ℝᵏ)^{k(q−2)/(2q)} for k ≥ 3.

    Raises:
        DomainError: If k < 3 or q outside [2, 2k/(k−2)]
    """
    k = validate_int_range(k, 1, None, 'k')
    if k < 3:
        raise DomainError(f"gn_from_sobolev needs k ≥ 3, got {k}", {'k': k})
    q = validate_finite(q, 'q')
    upper = critical_exponent(k)
    if not 2.0 <= q <= upper * (1.0 + 1e-15):
        raise DomainError(f"q must lie in [2, {upper}], got {q}", {'k': k, 'q': q})

    exponent = gn_sobolev_exponent(k, q)
    if exponent == 0.0:
        return Value(1.0)
    return exp(log(sobolev_euclidean(k)) * exponent)


def gn_scaling(theta: float, s_tilde: Number) -> Value:
    """
    S = θ^θ(1−θ)^{1−θ}·S̃, relating the homogeneous and inhomogeneous constants.

    Raises:
        RangeError: If θ is outside [0, 1)
    """
    theta = validate_range(theta, 0.0, 1.0, 'theta')
    if theta == 1.0:
        raise RangeError("theta must be below 1", {'theta': theta})
    factor = 1.0 if theta == 0.0 else theta ** theta * (1.0 - theta) ** (1.0 - theta)
    return as_value(s_tilde) * exact(factor)


def wangzhang_limit(k: int) -> Value:
    """lim_{q→2} S_q^GN(ℝᵏ)^{−q/(q−2)} = (2/(πek))^{k/2}."""
    k = validate_int_range(k, 1, 300, 'k')
    return exp(exact(0.5 * k * (math.log(2.0 / (math.pi * k)) - 1.0)))
