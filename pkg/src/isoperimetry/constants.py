"""
Isoperimetric constants I(G): perimeter(E) ≥ I(G)·|E|^{(Q−1)/Q}.

Euclidean values are exact. On ℍₙ the unconditional lower bound is
I(ℍₙ) ≥ (Cₙ·Cₙ′)⁻¹; Pansu's conjectured value is carried as a bound with
the PansuConjecture hypothesis so nothing downstream can use it silently.
"""

import math
from dataclasses import dataclass

from src.core.bound import Bound, Direction, Hypothesis, Quantity, exact_bound
from src.core.group import GroupSpec
from src.core.value import Value, exact, exp, log
from src.specfun.gamma import ln_gamma
from src.specfun.measures import sphere_area
from src.utils.exceptions import DomainError, ValidationError
from src.utils.logger import get_logger
from src.utils.validators import validate_int_range

logger = get_logger('isoperimetry')

MAX_N = 50
MAX_DIMENSION = 300

_LOG_PI = math.log(math.pi)
_LOG_TWO = math.log(2.0)


# ==================== HEISENBERG CONSTANTS ====================

def rep_constant(n: int) -> Value:
    """Cₙ = 2^{n−3} n Γ(n/2)² / π^{n+1}."""
    n = validate_int_range(n, 1, MAX_N, 'n')
    return exp(exact((n - 3) * _LOG_TWO + math.log(n) - (n + 1) * _LOG_PI) + ln_gamma(n / 2.0) * 2.0)


def bathtub_exponents(n: int):
    """(b, c, d) = ((2Q−1)/(2(Q−1)), n/2 + Q/(4(Q−1)), Q/(2(Q−1))) with Q = 2n+2."""
    Q = 2 * n + 2
    return (2 * Q - 1) / (2.0 * (Q - 1)), n / 2.0 + Q / (4.0 * (Q - 1)), Q / (2.0 * (Q - 1))


def bathtub_constant(n: int) -> Value:
    """
    Cₙ′ = Q^{1/Q}(πⁿ·Γ(b)/Γ(b+½)·Γ(c)/Γ(c+½)·Γ(1+d)/Γ(n+d))^{(Q−1)/Q}, Q = 2n+2.
    """
    n = validate_int_range(n, 1, MAX_N, 'n')
    Q = 2 * n + 2
    b, c, d = bathtub_exponents(n)
    inner = (n * _LOG_PI
             + (ln_gamma(b) - ln_gamma(b + 0.5))
             + (ln_gamma(c) - ln_gamma(c + 0.5))
             + (ln_gamma(1.0 + d) - ln_gamma(n + d)))
    return exp(inner * ((Q - 1.0) / Q) + math.log(Q) / Q)


def bathtub_constant_closed_form() -> Value:
    """C₁′ = 2⁻¹·3^{9/8}·π^{3/4}, free of Gamma functions."""
    return exp(exact(-_LOG_TWO + 1.125 * math.log(3.0) + 0.75 * _LOG_PI))


def iso_lower_heisenberg(n: int) -> Bound:
    """Unconditional lower bound I(ℍₙ) ≥ Cₙ⁻¹(Cₙ′)⁻¹."""
    value = 1.0 / (rep_constant(n) * bathtub_constant(n))
    return Bound(
        quantity=Quantity.ISO_CONST,
        direction=Direction.LOWER,
        value=value,
        hypothesis=Hypothesis.UNCONDITIONAL,
        route=('rep_constant', 'bathtub_constant', 'iso_lower_heisenberg'),
        group=GroupSpec(n, 0),
    )


def pansu_isoperimetric(n: int) -> Bound:
    """
    Pansu's conjectured I(ℍₙ) =
    (2n/(2n+1))(2n+2)^{(2n+1)/(2n+2)}Γ((2n+3)/2)^{1/(2n+2)}π^{(2n+1)/(2(2n+2))}2^{1/(n+1)}/Γ(n+1)^{1/(n+1)}.
    """
    n = validate_int_range(n, 1, MAX_N, 'n')
    Q = 2 * n + 2
    algebraic = (math.log(2.0 * n / (2 * n + 1))
                 + (Q - 1.0) / Q * math.log(Q)
                 + (Q - 1.0) / (2.0 * Q) * _LOG_PI
                 + _LOG_TWO / (n + 1))
    value = exp(exact(algebraic) + ln_gamma((2 * n + 3) / 2.0) * (1.0 / Q) - ln_gamma(n + 1.0) * (1.0 / (n + 1)))
    return Bound(
        quantity=Quantity.ISO_CONST,
        direction=Direction.EXACT,
        value=value,
        hypothesis=Hypothesis.PANSU_CONJECTURE,
        route=('pansu_isoperimetric',),
        group=GroupSpec(n, 0),
    )


def pansu_original_constant() -> Value:
    """Pansu's first lower bound (8π/3)^{1/4} on I(ℍ₁)."""
    return exp(exact(0.25 * math.log(8.0 * math.pi / 3.0)))


def pansu_original_bound() -> Bound:
    return Bound(Quantity.ISO_CONST, Direction.LOWER, pansu_original_constant(),
                 Hypothesis.UNCONDITIONAL, ('pansu_original_constant',), GroupSpec(1, 0))


# ==================== EUCLIDEAN AND PRODUCTS ====================

def iso_euclidean(d: int) -> Value:
    """I(ℝᵈ) = d^{(d−1)/d}|S^{d−1}|^{1/d}."""
    d = validate_int_range(d, 1, MAX_DIMENSION, 'd')
    return exp(exact((d - 1.0) / d * math.log(d)) + log(sphere_area(d)) * (1.0 / d))


def iso_euclidean_bound(d: int) -> Bound:
    return exact_bound(Quantity.ISO_CONST, iso_euclidean(d), 'iso_euclidean', GroupSpec(0, d))


def iso_lift(g: GroupSpec, iso_hn: Bound) -> Bound:
    """
    I(ℍₙ×ℝᵏ) ≥ I(ℝ^{Q+k})·(I(ℍₙ)/I(ℝ^Q))^{Q/(Q+k)} with Q = 2n+2.

    Args:
        g: Target group, n ≥ 1
        iso_hn: Lower or Pansu-exact bound on I(ℍₙ)

    Returns:
        Lower bound inheriting the hypothesis of iso_hn; iso_hn itself when k = 0

    Raises:
        DimensionMismatchError: If iso_hn is not a bound for ℍₙ
        DirectionError: If iso_hn is an upper bound
    """
    if g.n < 1:
        raise DomainError("iso_lift needs n ≥ 1", {'group': g.label})
    iso_hn.require(Quantity.ISO_CONST, group=g.heisenberg_factor())
    if iso_hn.group is None:
        raise ValidationError("iso_hn must carry its group", field='group')
    if g.k == 0:
        return iso_hn

    Q = g.heisenberg_dimension
    ratio = iso_hn.value / iso_euclidean(Q)
    value = iso_euclidean(Q + g.k) * exp(log(ratio) * (Q / (Q + g.k)))
    return iso_hn.derive(Quantity.ISO_CONST, value, 'iso_lift', relation=Direction.LOWER, group=g)


@dataclass(frozen=True)
class IsoValue:
    """An isoperimetric bound tied to its group."""

    group: GroupSpec
    bound: Bound

    def __post_init__(self):
        if self.bound.quantity != Quantity.ISO_CONST:
            raise ValidationError("IsoValue needs an iso_const bound", field='bound')
        exact_unconditional = (self.bound.direction == Direction.EXACT
                               and self.bound.hypothesis == Hypothesis.UNCONDITIONAL)
        if exact_unconditional and not self.group.is_euclidean:
            raise ValidationError("Only Euclidean isoperimetric constants are exact", field='bound')


def iso_bound_for(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> IsoValue:
    """Best available isoperimetric bound for ℍₙ×ℝᵏ under the hypothesis."""
    if g.is_euclidean:
        return IsoValue(g, iso_euclidean_bound(g.k))
    if Hypothesis(hypothesis) == Hypothesis.PANSU_CONJECTURE:
        base = pansu_isoperimetric(g.n)
    else:
        base = iso_lower_heisenberg(g.n)
    return IsoValue(g, iso_lift(g, base))
