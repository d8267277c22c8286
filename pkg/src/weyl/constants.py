"""Weyl constants W(G) in N(λ) ~ W(G)|Ω|λ^{Q/2}"""

import math

from src.core.group import GroupSpec
from src.core.value import Value, exact, exp
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import DomainError
from src.utils.validators import validate_int_range, validate_range
from src.weyl.cn import MAX_SERIES_N, cn_hurwitz

MAX_EUCLIDEAN_K = 300

_LOG_FOUR_PI = math.log(4.0 * math.pi)


def weyl_heisenberg(n: int) -> Value:
    """W(ℍₙ) = cₙ / (2(n+1)(2π)^{n+1})."""
    n = validate_int_range(n, 1, MAX_SERIES_N, 'n')
    return cn_hurwitz(n) / (2.0 * (n + 1) * (2.0 * math.pi) ** (n + 1))


def weyl_heisenberg_h3_closed_form() -> Value:
    """W(ℍ₃) = (12 − π²)/(2⁷·768·π²)."""
    pi_sq = math.pi ** 2
    return exact((12.0 - pi_sq) / (2 ** 7 * 768 * pi_sq))


def weyl_euclidean(k: int) -> Value:
    """W(ℝᵏ) = (4π)^{−k/2} / Γ(k/2 + 1)."""
    k = validate_int_range(k, 1, MAX_EUCLIDEAN_K, 'k')
    return exp(-0.5 * k * _LOG_FOUR_PI - ln_gamma(k / 2.0 + 1.0))


def weyl_hn_rk(g: GroupSpec) -> Value:
    """
    W(ℍₙ×ℝᵏ) = W(ℍₙ)·(4π)^{−k/2}·Γ(n+2)/Γ((2n+k+4)/2).

    Raises:
        DomainError: If g is Euclidean (use weyl_euclidean)
    """
    if g.n < 1:
        raise DomainError("weyl_hn_rk needs n ≥ 1", {'group': g.label})
    validate_int_range(g.k, 0, MAX_EUCLIDEAN_K, 'k')
    base = weyl_heisenberg(g.n)
    if g.k == 0:
        return base
    factor = exp(-0.5 * g.k * _LOG_FOUR_PI + (ln_gamma(g.n + 2.0) - ln_gamma((2 * g.n + g.k + 4) / 2.0)))
    return base * factor


def weyl_product(w1: Value, q1: float, w2: Value, q2: float) -> Value:
    """
    W(G₁×G₂) = W(G₁)W(G₂)·Γ(Q₁/2+1)Γ(Q₂/2+1)/Γ(Q/2+1), Q = Q₁+Q₂.

    Raises:
        RangeError: If q1 < 1 or q2 < 0
        DomainError: If a Weyl constant is not positive
    """
    q1 = validate_range(q1, 1.0, None, 'q1')
    q2 = validate_range(q2, 0.0, None, 'q2')
    if w1.estimate <= 0 or w2.estimate <= 0:
        raise DomainError("Weyl constants must be positive", {'w1': w1.estimate, 'w2': w2.estimate})
    if q2 == 0.0:
        return w1 * w2
    factor = exp(ln_gamma(q1 / 2.0 + 1.0) + ln_gamma(q2 / 2.0 + 1.0) - ln_gamma((q1 + q2) / 2.0 + 1.0))
    return w1 * w2 * factor


def weyl_for(g: GroupSpec) -> Value:
    """Weyl constant of any ℍₙ×ℝᵏ, Euclidean included."""
    if g.is_euclidean:
        return weyl_euclidean(g.k)
    return weyl_hn_rk(g)
