"""
Upper bounds on the Pleijel constant of ℍₙ×ℝᵏ.

Every bound has the form γ ≤ (C^FK)^{−Q/2}·W⁻¹ for some Faber–Krahn route;
the functions here are the routes written out in closed form. best_gamma_bound
collects them and keeps the smallest.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.core.bound import Bound, Direction, Hypothesis, Quantity
from src.core.group import GroupSpec
from src.core.value import Value, exact, exp, log
from src.faberkrahn.routes import FKRouteName
from src.functional.gagliardo_nirenberg import gn_from_sobolev, gn_nagy_Q
from src.functional.lifting import lifting_exponent, sobolev_lift
from src.isoperimetry.constants import iso_euclidean, iso_lower_heisenberg, pansu_isoperimetric
from src.pleijel.gamma import gamma_euclidean, gamma_tilde, gamma_tilde_bound
from src.specfun.bessel import bessel_first_zero
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import DomainError, RouteUnavailableError, ValidationError
from src.utils.logger import get_logger
from src.utils.validators import validate_finite, validate_int_range, validate_range
from src.weyl.cn import MAX_SERIES_N
from src.weyl.constants import weyl_heisenberg

logger = get_logger('pleijel.bounds')

COURANT_BASELINE = 1.0

_LOG_FOUR_PI = math.log(4.0 * math.pi)


def lift_gn_constant(Q: int, k: int) -> Value:
    if k == 1:
        return gn_nagy_Q(Q)
    return gn_from_sobolev(k, lifting_exponent(Q, k))


def pleijel_lifting_bound(g: GroupSpec) -> Bound:
    """
    γ ≤ (C^GN_q(ℝᵏ))^{−(Q+k)/2}·Q^{Q/2}k^{k/2}/(Q+k)^{(Q+k)/2}·(4π)^{k/2}·Γ((Q+k+2)/2)/Γ((Q+2)/2)·γ̃ₙ.

    Raises:
        RouteUnavailableError: For k = 2
        DomainError: For k = 0 or n = 0
    """
    lifted = sobolev_lift(g)
    Q, k = g.heisenberg_dimension, g.k
    D = Q + k
    log_factor = (0.5 * Q * math.log(Q) + 0.5 * k * math.log(k) - 0.5 * D * math.log(D)
                  + 0.5 * k * _LOG_FOUR_PI)
    value = (exp(log(lift_gn_constant(Q, k)) * (-0.5 * D)
                 + exact(log_factor)
                 + (ln_gamma((D + 2) / 2.0) - ln_gamma((Q + 2) / 2.0)))
             * gamma_tilde(g.n))
    logger.debug(f"pleijel_lifting_bound {g}: {value.estimate:.10g}")
    return lifted.derive(
        Quantity.PLEIJEL_CONST, value, 'pleijel_lifting_bound',
        decreasing=True, relation=Direction.UPPER, group=g,
    )


def pleijel_lifting_k1_form(n: int) -> Value:
    """The k = 1 lifting bound simplified: γ̃ₙ·2((Q−1)/(Q+1))^{(Q−1)/2}."""
    Q = 2 * n + 2
    return gamma_tilde(n) * exact(2.0 * ((Q - 1.0) / (Q + 1.0)) ** ((Q - 1.0) / 2.0))


def lifting_k1_factor(Q: float) -> float:
    """2((Q−1)/(Q+1))^{(Q−1)/2}; equals 1 at Q = 3 and decreases."""
    Q = validate_range(Q, 1.0, None, 'Q', min_inclusive=False)
    return 2.0 * ((Q - 1.0) / (Q + 1.0)) ** ((Q - 1.0) / 2.0)


def _heisenberg_iso(n: int, hypothesis: Hypothesis) -> Bound:
    if Hypothesis(hypothesis) == Hypothesis.PANSU_CONJECTURE:
        return pansu_isoperimetric(n)
    return iso_lower_heisenberg(n)


def pleijel_iso_bound(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> Bound:
    """
    γ(ℍₙ×ℝᵏ) ≤ γ(ℝ^{Q+k})·(I(ℝ^Q)/I(ℍₙ))^Q·W(ℍₙ)⁻¹·(4π)^{−(n+1)}·Γ(n+2)⁻¹, Q = 2n+2.

    I(ℍₙ) is the unconditional lower bound or, under PansuConjecture, Pansu's value.
    """
    if g.n < 1:
        raise DomainError("pleijel_iso_bound needs n ≥ 1", {'group': g.label})
    validate_int_range(g.n, 1, MAX_SERIES_N, 'n')
    iso_hn = _heisenberg_iso(g.n, hypothesis)
    Q = g.heisenberg_dimension

    ratio = iso_euclidean(Q) / iso_hn.value
    value = (gamma_euclidean(Q + g.k)
             * exp(log(ratio) * float(Q) - (g.n + 1) * _LOG_FOUR_PI - ln_gamma(g.n + 2.0))
             / weyl_heisenberg(g.n))
    return iso_hn.derive(
        Quantity.PLEIJEL_CONST, value, 'pleijel_iso_bound',
        decreasing=True, relation=Direction.UPPER, group=g,
    )


def pleijel_pansu(n: int) -> Bound:
    """
    Under Pansu's conjecture,
    γ(ℍₙ) ≤ Q(Q−1)^QΓ(Q/2)²/((Q−2)^QΓ((Q+1)/2)π^{(Q−1)/2}·4)·j_{(Q−2)/2,1}^{−Q}·W(ℍₙ)⁻¹.
    """
    n = validate_int_range(n, 1, MAX_SERIES_N, 'n')
    Q = 2 * n + 2
    algebraic = (math.log(Q) + Q * math.log((Q - 1.0) / (Q - 2.0))
                 - 0.5 * (Q - 1.0) * math.log(math.pi) - math.log(4.0))
    j = bessel_first_zero((Q - 2) / 2.0)
    value = exp(exact(algebraic) + ln_gamma(Q / 2.0) * 2.0 - ln_gamma((Q + 1) / 2.0) - log(j) * float(Q))
    value = value / weyl_heisenberg(n)
    return pansu_isoperimetric(n).derive(
        Quantity.PLEIJEL_CONST, value, 'pleijel_pansu', decreasing=True, relation=Direction.UPPER,
    )


def maincomp_specialized(n: int, k: int, iso_hn: Optional[Bound] = None) -> Value:
    """
    The iso route for n = 1, 2 with the constants multiplied out:
    n = 1: 2^{13+k}Γ((6+k)/2)²I(ℍ₁)^{−4}j_{(2+k)/2,1}^{−(4+k)}
    n = 2: 2^{12+k}3⁶πΓ((8+k)/2)²I(ℍ₂)^{−6}j_{(4+k)/2,1}^{−(6+k)}

    Args:
        n: 1 or 2
        k: Euclidean dimension, k ≥ 0
        iso_hn: Bound on I(ℍₙ); defaults to the unconditional lower bound
    """
    if n not in (1, 2):
        raise DomainError(f"maincomp_specialized covers n = 1, 2; got {n}", {'n': n})
    k = validate_int_range(k, 0, 300, 'k')
    if iso_hn is None:
        iso_hn = iso_lower_heisenberg(n)
    iso_hn.require(Quantity.ISO_CONST, group=GroupSpec(n, 0))

    Q = 2 * n + 2
    D = Q + k
    if n == 1:
        log_constant = (13 + k) * math.log(2.0)
    else:
        log_constant = (12 + k) * math.log(2.0) + 6.0 * math.log(3.0) + math.log(math.pi)
    j = bessel_first_zero((Q - 2 + k) / 2.0)
    return exp(exact(log_constant) + ln_gamma((D + 2) / 2.0) * 2.0
               - log(iso_hn.value) * float(Q) - log(j) * float(D))


# ==================== BEST OF ROUTES ====================

@dataclass(frozen=True)
class PleijelRoute:
    name: FKRouteName
    bound: Bound

    @property
    def estimate(self) -> float:
        return self.bound.estimate


@dataclass(frozen=True)
class PleijelBound:
    """
    The smallest available upper bound on γ for a group.

    The raw bound may exceed 1; headline caps it at the Courant baseline.
    """

    group: GroupSpec
    bound: Bound
    winner: FKRouteName
    candidates: Tuple[PleijelRoute, ...] = field(default_factory=tuple)
    courant_baseline: float = COURANT_BASELINE

    def __post_init__(self):
        if self.bound.quantity != Quantity.PLEIJEL_CONST or self.bound.direction != Direction.UPPER:
            raise ValidationError("PleijelBound needs an upper bound on pleijel_const", field='bound')
        if self.bound.value.estimate <= 0:
            raise ValidationError("Pleijel bound must be positive", field='bound')

    @property
    def headline(self) -> float:
        return min(self.bound.estimate, self.courant_baseline)

    @property
    def is_open(self) -> bool:
        """True when no route beats Courant."""
        return self.bound.estimate >= self.courant_baseline

    @property
    def hypothesis(self) -> Hypothesis:
        return self.bound.hypothesis


def gamma_candidates(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> Tuple[PleijelRoute, ...]:
    """Every Pleijel route available for ℍₙ×ℝᵏ under the hypothesis."""
    hypothesis = Hypothesis(hypothesis)
    candidates = []
    if g.k == 0:
        candidates.append(PleijelRoute(FKRouteName.FROM_SOBOLEV_JL, gamma_tilde_bound(g.n)))
    else:
        try:
            candidates.append(PleijelRoute(FKRouteName.FROM_SOBOLEV_LIFT, pleijel_lifting_bound(g)))
        except RouteUnavailableError as e:
            logger.debug(f"{g}: {e.message}")

    candidates.append(PleijelRoute(FKRouteName.FROM_ISO_UNCONDITIONAL, pleijel_iso_bound(g)))
    if hypothesis == Hypothesis.PANSU_CONJECTURE:
        pansu = pleijel_pansu(g.n) if g.k == 0 else pleijel_iso_bound(g, Hypothesis.PANSU_CONJECTURE)
        candidates.append(PleijelRoute(FKRouteName.FROM_ISO_PANSU, pansu))
    return tuple(candidates)


def best_gamma_bound(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> PleijelBound:
    """
    Minimum over the Pleijel routes for ℍₙ×ℝᵏ.

    Raises:
        DomainError: For Euclidean groups (use gamma_euclidean)
    """
    if g.is_euclidean:
        raise DomainError("best_gamma_bound needs n ≥ 1; use gamma_euclidean", {'group': g.label})
    candidates = gamma_candidates(g, hypothesis)
    winner = min(candidates, key=lambda route: route.estimate)
    logger.debug(f"best_gamma_bound {g} ({Hypothesis(hypothesis).value}): "
                 f"{winner.name.value} {winner.estimate:.10g}")
    return PleijelBound(
        group=g,
        bound=winner.bound.with_route('best_gamma_bound'),
        winner=winner.name,
        candidates=candidates,
    )


# ==================== CRITERION AND PRODUCTS ====================

def example_criterion(inf_curl: float, mean_inv_curl: float, fkw_product: float) -> Tuple[bool, float]:
    """
    Pleijel criterion for a contact manifold: fkw_product·inf_curl·mean_inv_curl > 1.

    fkw_product stands for (c^FK(ℍ₁))²·Ŵ(ℍ₁) = 1/γ(ℍ₁).

    Returns:
        (holds, margin) with margin = product − 1
    """
    values = []
    for name, v in (('inf_curl', inf_curl), ('mean_inv_curl', mean_inv_curl), ('fkw_product', fkw_product)):
        v = validate_finite(v, name)
        if v <= 0:
            raise DomainError(f"{name} must be positive, got {v}", {name: v})
        values.append(v)
    margin = values[0] * values[1] * values[2] - 1.0
    return margin > 0.0, margin


def pleijel_product_bound(gamma1: Value, q1: float, gamma2: Value, q2: float) -> Value:
    """
    γ̃(G₁×G₂) ≤ γ̃(G₁)γ̃(G₂)·Q₁^{Q₁/2}Q₂^{Q₂/2}/Q^{Q/2}·Γ(Q/2+1)/(Γ(Q₁/2+1)Γ(Q₂/2+1)).
    """
    q1 = validate_range(q1, 0.0, None, 'q1', min_inclusive=False)
    q2 = validate_range(q2, 0.0, None, 'q2', min_inclusive=False)
    total = q1 + q2
    log_factor = exact(0.5 * q1 * math.log(q1) + 0.5 * q2 * math.log(q2) - 0.5 * total * math.log(total))
    factor = exp(log_factor + ln_gamma(total / 2.0 + 1.0) - ln_gamma(q1 / 2.0 + 1.0) - ln_gamma(q2 / 2.0 + 1.0))
    return gamma1 * gamma2 * factor


def pleijel_product_partial_factor(q1: float, q2: float) -> Value:
    """Q₂^{Q₂/2}/Q^{Q/2}·Γ(Q/2+1)/Γ(Q₂/2+1), the part of the product factor that depends on Q₂."""
    q1 = validate_range(q1, 0.0, None, 'q1', min_inclusive=False)
    q2 = validate_range(q2, 0.0, None, 'q2', min_inclusive=False)
    total = q1 + q2
    return exp(exact(0.5 * q2 * math.log(q2) - 0.5 * total * math.log(total))
               + ln_gamma(total / 2.0 + 1.0) - ln_gamma(q2 / 2.0 + 1.0))


def pleijel_product_factor_limit(q1: float) -> Value:
    """Limit (2e)^{−Q₁/2} of the partial product factor as Q₂ → ∞."""
    q1 = validate_range(q1, 0.0, None, 'q1', min_inclusive=False)
    return exp(exact(-0.5 * q1 * (math.log(2.0) + 1.0)))
