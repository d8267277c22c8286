"""
Lower bounds on C^Sob(ℍₙ×ℝᵏ) by dimensional lifting and product groups.
"""

import math

from src.core.bound import Bound, Direction, Quantity
from src.core.group import GroupSpec
from src.core.value import Value, exact, exp, log
from src.functional.gagliardo_nirenberg import gn_from_sobolev, gn_nagy_Q
from src.functional.sobolev import sobolev_euclidean, sobolev_heisenberg, sobolev_heisenberg_bound
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import DomainError, RouteUnavailableError
from src.utils.logger import get_logger
from src.utils.validators import validate_range

logger = get_logger('functional.lifting')


def lifting_exponent(Q: int, k: int) -> float:
    """Exponent q = 2(Q+k)/(Q+k−2) at which the Euclidean factor is interpolated."""
    return 2.0 * (Q + k) / (Q + k - 2)


def _weight_factor(q1: float, q2: float) -> Value:
    """Q / (Q₁^{Q₁/Q} Q₂^{Q₂/Q}), Q = Q₁ + Q₂."""
    total = q1 + q2
    return exp(exact(math.log(total) - (q1 / total) * math.log(q1) - (q2 / total) * math.log(q2)))


def product_sobolev_asym(c_gn: Value, q1: float, c1: Value, q2: float) -> Value:
    """
    C^Sob(G₁×G₂) ≥ C^GN_q(G₂)·C₁^{Q₁/Q}·Q/(Q₁^{Q₁/Q}Q₂^{Q₂/Q}).

    Args:
        c_gn: Gagliardo–Nirenberg constant of G₂ at q = 2Q/(Q−2)
        q1: Homogeneous dimension of G₁
        c1: Sobolev constant of G₁
        q2: Homogeneous dimension of G₂
    """
    q1 = validate_range(q1, 0.0, None, 'q1', min_inclusive=False)
    q2 = validate_range(q2, 0.0, None, 'q2', min_inclusive=False)
    return c_gn * exp(log(c1) * (q1 / (q1 + q2))) * _weight_factor(q1, q2)


def product_sobolev(c1: Value, q1: float, c2: Value, q2: float) -> Value:
    """
    C^Sob(G₁×G₂) ≥ C₁^{Q₁/Q}C₂^{Q₂/Q}·Q/(Q₁^{Q₁/Q}Q₂^{Q₂/Q}) for Q₁, Q₂ ≥ 3.

    Raises:
        DomainError: If either homogeneous dimension is below 3
    """
    if q1 < 3 or q2 < 3:
        raise DomainError("product_sobolev needs both homogeneous dimensions ≥ 3", {'q1': q1, 'q2': q2})
    total = q1 + q2
    return exp(log(c1) * (q1 / total) + log(c2) * (q2 / total)) * _weight_factor(q1, q2)


def require_lift_group(g: GroupSpec) -> None:
    if g.n < 1 or g.k < 1:
        raise DomainError("Lifting needs n ≥ 1 and k ≥ 1", {'group': g.label})


def sobolev_lift(g: GroupSpec) -> Bound:
    """
    Laptev–Weidl lifting of C^Sob(ℍₙ) to ℍₙ×ℝᵏ.

    C^Sob(ℍₙ×ℝᵏ) ≥ C^GN_q(ℝᵏ)·C^Sob(ℍₙ)^{Q/(Q+k)}·(Q+k)/(Q^{Q/(Q+k)}k^{k/(Q+k)}),
    with Q = 2n+2 and q = 2(Q+k)/(Q+k−2). The line constant is explicit; for
    k ≥ 3 the Gagliardo–Nirenberg constant is bounded through Sobolev.

    Raises:
        RouteUnavailableError: For k = 2
    """
    require_lift_group(g)
    if g.k == 2:
        raise RouteUnavailableError('sobolev_lift', 'no explicit Gagliardo–Nirenberg constant on ℝ²')

    Q = g.heisenberg_dimension
    if g.k == 1:
        c_gn = gn_nagy_Q(Q)
        gn_ops = ('gn_nagy_Q',)
    else:
        c_gn = gn_from_sobolev(g.k, lifting_exponent(Q, g.k))
        gn_ops = ('sobolev_euclidean', 'gn_from_sobolev')

    value = product_sobolev_asym(c_gn, Q, sobolev_heisenberg(g.n), g.k)
    base = sobolev_heisenberg_bound(g.n).with_route(*gn_ops)
    logger.debug(f"sobolev_lift {g}: {value.estimate:.10g}")
    return base.derive(Quantity.SOBOLEV_CONST, value, 'sobolev_lift', relation=Direction.LOWER, group=g)


def sobolev_lift_k1_form(n: int) -> Value:
    """
    The k = 1 lift written out:
    (Q+1)(1/(4(Q−1)^{Q−1}))^{1/(Q+1)}(√π Γ((Q+1)/2)/Γ((Q+2)/2))^{2/(Q+1)}·C^Sob(ℍₙ)^{Q/(Q+1)}.
    """
    Q = 2 * n + 2
    algebraic = math.log(Q + 1.0) - (math.log(4.0) + (Q - 1.0) * math.log(Q - 1.0)) / (Q + 1.0)
    gamma_part = (0.5 * math.log(math.pi) + ln_gamma((Q + 1.0) / 2.0) - ln_gamma((Q + 2.0) / 2.0)) * (2.0 / (Q + 1.0))
    return exp(exact(algebraic) + gamma_part + log(sobolev_heisenberg(n)) * (Q / (Q + 1.0)))


def sobolev_lift_symmetric(g: GroupSpec) -> Bound:
    """
    C^Sob(ℍₙ×ℝᵏ) ≥ C^Sob(ℝᵏ)^{k/(Q+k)}C^Sob(ℍₙ)^{Q/(Q+k)}·(Q+k)/(Q^{Q/(Q+k)}k^{k/(Q+k)}).

    Raises:
        DomainError: If k < 3
    """
    require_lift_group(g)
    if g.k < 3:
        raise DomainError(f"Symmetric lifting needs k ≥ 3, got {g.k}", {'group': g.label})
    Q = g.heisenberg_dimension
    value = product_sobolev(sobolev_heisenberg(g.n), Q, sobolev_euclidean(g.k), g.k)
    base = sobolev_heisenberg_bound(g.n).with_route('sobolev_euclidean')
    return base.derive(Quantity.SOBOLEV_CONST, value, 'sobolev_lift_symmetric', relation=Direction.LOWER, group=g)


def best_sobolev_lift(g: GroupSpec) -> Bound:
    """The larger of sobolev_lift and sobolev_lift_symmetric where both apply."""
    lifted = sobolev_lift(g)
    if g.k < 3:
        return lifted
    symmetric = sobolev_lift_symmetric(g)
    return symmetric if symmetric.estimate > lifted.estimate else lifted
