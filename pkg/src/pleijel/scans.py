"""
Large-dimension behaviour of the Pleijel bounds.

The lifting bound splits as a·b·c where a is controlled by the
Aubin–Talenti constant, b by Stirling's formula and c by γ̃ₙ; the scan
evaluates the best bound over a whole (n, k) triangle.
"""

import math
from typing import List, Tuple

from src.core.bound import Hypothesis
from src.core.group import GroupSpec
from src.core.record import Relation, VerificationRecord, check_relation, check_true
from src.core.value import Value, exact, exp, log
from src.functional.lifting import require_lift_group
from src.pleijel.bounds import best_gamma_bound, lift_gn_constant
from src.pleijel.gamma import gamma_tilde
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import RouteUnavailableError
from src.utils.logger import get_logger
from src.utils.validators import validate_int_range, validate_range
from src.weyl.cn import MAX_SERIES_N

logger = get_logger('pleijel.scans')

MIN_SCAN_DIM = 6
MAX_SCAN_DIM = 80
STIRLING_POINTS = range(10, 201)
STIRLING_CONSTANT = 1.0 / 6.0

# Cases the unconditional routes leave at or above the Courant baseline
OPEN_CASES = frozenset({(1, 0), (2, 0), (3, 0), (1, 1)})


def large_dimension_factors(n: int, k: int) -> Tuple[Value, Value, Value]:
    """
    The lifting bound as a product a·b·c:
    a = (πek/2)^{k/2}S^{−(Q+k)/2},
    b = (2e)^{k/2}Q^{(Q+1)/2}/(Q+k)^{(Q+k+1)/2}·Γ((Q+k+2)/2)/Γ((Q+2)/2),
    c = (2/e)^k((Q+k)/Q)^{1/2}γ̃ₙ,
    with S the Gagliardo–Nirenberg constant of ℝᵏ at the lifting exponent.

    Raises:
        RouteUnavailableError: For k = 2
    """
    g = GroupSpec(n, k)
    require_lift_group(g)
    if k == 2:
        raise RouteUnavailableError('large_dimension_factors', 'no explicit Gagliardo–Nirenberg constant on ℝ²')
    Q = g.heisenberg_dimension
    D = Q + k

    a = exp(exact(0.5 * k * math.log(math.pi * math.e * k / 2.0)) + log(lift_gn_constant(Q, k)) * (-0.5 * D))
    b = exp(exact(0.5 * k * (math.log(2.0) + 1.0) + 0.5 * (Q + 1) * math.log(Q) - 0.5 * (D + 1) * math.log(D))
            + ln_gamma((D + 2) / 2.0) - ln_gamma((Q + 2) / 2.0))
    c = exact(math.exp(k * (math.log(2.0) - 1.0)) * math.sqrt(D / Q)) * gamma_tilde(n)
    return a, b, c


def aubin_talenti_a_bound(k: int) -> Value:
    """(4π)^{−1/2}(2e/(k−2))^{k/2}Γ((k+1)/2); tends to e/√2."""
    k = validate_int_range(k, 3, 300, 'k')
    return exp(exact(-0.5 * math.log(4.0 * math.pi) + 0.5 * k * math.log(2.0 * math.e / (k - 2)))
               + ln_gamma((k + 1) / 2.0))


def stirling_remainder(x: float) -> float:
    """|ln(x^{−(x+1)/2}Γ((x+2)/2)) + (x/2)ln(2e) − ½ln π|."""
    x = validate_range(x, 1.0, None, 'x')
    log_term = -0.5 * (x + 1.0) * math.log(x) + ln_gamma((x + 2.0) / 2.0).estimate
    return abs(log_term + 0.5 * x * (math.log(2.0) + 1.0) - 0.5 * math.log(math.pi))


def fitted_stirling_constant() -> float:
    """max x·R(x) over the scan points."""
    return max(x * stirling_remainder(x) for x in STIRLING_POINTS)


def scan_record(g: GroupSpec) -> VerificationRecord:
    """
    Verdict on the best unconditional Pleijel bound of one group.

    Cases proven by the unconditional routes must come out below 1; the open
    cases must not; for n ≥ 3, k ≥ 2 the outcome is recorded without a verdict.
    """
    best = best_gamma_bound(g, Hypothesis.UNCONDITIONAL)
    claim_id = f"maincomp.largedim.n{g.n:02d}k{g.k:02d}"
    route = best.winner.value
    if (g.n, g.k) in OPEN_CASES:
        return check_relation(claim_id, f"γ({g}) bound stays ≥ 1 ({route}): open case",
                              best.bound.value, Relation.GE, 1.0)
    if g.n >= 3 and g.k >= 2:
        below = best.bound.estimate < 1.0
        verdict = 'below 1' if below else 'not below 1'
        return check_true(claim_id, f"γ({g}) ≤ {best.bound.estimate:.6g} ({route}): {verdict}",
                          True, margin=1.0 - best.bound.estimate)
    return check_relation(claim_id, f"γ({g}) < 1 via {route}", best.bound.value, Relation.LT, 1.0)


def stirling_record(x: int) -> VerificationRecord:
    return check_relation(
        f"maincomp.stirling.x{x:03d}", f"Stirling remainder at x = {x} below 1/(6x)",
        exact(stirling_remainder(x)), Relation.LE, STIRLING_CONSTANT / x,
    )


def stirling_fit_record() -> VerificationRecord:
    """The fitted constant max x·R(x) on the scan points, which must not exceed 1/6."""
    fitted = fitted_stirling_constant()
    return check_relation(
        "maincomp.stirling.fitted", f"Fitted Stirling constant max x·R(x) = {fitted:.6g} on x = 10..200, at most 1/6",
        exact(fitted), Relation.LE, STIRLING_CONSTANT,
    )


def scan_groups(max_total_dim: int) -> List[GroupSpec]:
    """Every ℍₙ×ℝᵏ with 2n+2+k ≤ max_total_dim and 1 ≤ n ≤ 13, ordered by (n, k)."""
    max_total_dim = validate_int_range(max_total_dim, MIN_SCAN_DIM, MAX_SCAN_DIM, 'max_total_dim')
    return [GroupSpec(n, k)
            for n in range(1, min(MAX_SERIES_N, (max_total_dim - 2) // 2) + 1)
            for k in range(0, max_total_dim - 2 * n - 2 + 1)]


def large_dimension_scan(max_total_dim: int) -> List[VerificationRecord]:
    """
    Best Pleijel bound for every group of scan_groups(max_total_dim), plus the
    Stirling remainder check R(x) ≤ 1/(6x) on x = 10..200 and the fitted
    constant max x·R(x).
    """
    records = [scan_record(g) for g in scan_groups(max_total_dim)]
    records.extend(stirling_record(x) for x in STIRLING_POINTS)
    fit = stirling_fit_record()
    records.append(fit)
    logger.debug(f"large_dimension_scan to {max_total_dim}: {len(records)} records, "
                 f"fitted Stirling constant {fit.computed.estimate:.6g}")
    return records
