"""
Claim lists for the verification campaigns.

A claim is one independent numeric check that yields exactly one
VerificationRecord. Builders return claims in a fixed order; the campaign
runner sorts the records by claim_id, so evaluation order never shows in
the output. Claim ids read '<campaign>.<label>.<index>'.
"""

import math
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, List, Tuple

from src.core.bound import Hypothesis
from src.core.group import GroupSpec
from src.core.record import Relation, VerificationRecord, check_close, check_relation, check_true
from src.core.value import Value, exact, exp, log
from src.faberkrahn.routes import fk_euclidean, fk_from_iso, fk_iso_equality, fk_pansu_route
from src.functional.gagliardo_nirenberg import gn_nagy, gn_nagy_Q, wangzhang_limit
from src.functional.lifting import sobolev_lift, sobolev_lift_k1_form, sobolev_lift_symmetric
from src.functional.sobolev import sobolev_euclidean
from src.harness.reference import reference
from src.isoperimetry.constants import (
    bathtub_constant,
    bathtub_constant_closed_form,
    iso_lower_heisenberg,
    pansu_isoperimetric,
    pansu_original_constant,
)
from src.isoperimetry.quadrature import bathtub_oracle
from src.pleijel.bounds import (
    best_gamma_bound,
    example_criterion,
    lifting_k1_factor,
    maincomp_specialized,
    pleijel_iso_bound,
    pleijel_lifting_bound,
    pleijel_lifting_k1_form,
    pleijel_pansu,
    pleijel_product_factor_limit,
    pleijel_product_partial_factor,
)
from src.pleijel.gamma import gamma_euclidean, gamma_euclidean_ratio, gamma_from, gamma_tilde, gamma_tilde_quotient
from src.pleijel.quotients import (
    ALPHA_QUOTIENT_CEILING,
    MAX_ALPHA_M,
    SMALL_M_LIMIT,
    alpha,
    alpha_direct,
    alpha_quotient,
    alpha_quotient_epsilon_polynomial,
    bessel_zero_ratio_bound,
    combined_quotient_upper,
    gamma_rd_quotient,
    gamma_rd_quotient_upper,
    gamma_tilde_quotient_denominator,
    gamma_tilde_quotient_upper,
    pansu_base_product,
    pansu_base_product_closed_form,
    pansu_step_quotient,
    pansu_threshold_constant,
)
from src.pleijel.scans import (
    STIRLING_POINTS,
    aubin_talenti_a_bound,
    large_dimension_factors,
    scan_groups,
    scan_record,
    stirling_fit_record,
    stirling_record,
)
from src.specfun.bessel import bessel_first_zero, bessel_j, bessel_zero_bracket
from src.utils.exceptions import SingularityError
from src.weyl.cn import (
    MAX_SERIES_N,
    QUOTIENT_FORMS,
    cn_closed_form,
    cn_hurwitz,
    cn_quotient_closed_form,
    cn_series,
    series_quotient_floor,
)
from src.weyl.constants import (
    weyl_euclidean,
    weyl_heisenberg,
    weyl_heisenberg_h3_closed_form,
    weyl_hn_rk,
    weyl_product,
)

# Relative tolerances for identities between two codings of one quantity
TIGHT_TOLERANCE = 1e-12
IDENTITY_TOLERANCE = 1e-10
QUADRATURE_TOLERANCE = 1e-6

SERIES_TOLERANCE = 1e-7
RESIDUAL_LIMIT = 1e-9
HPS_LIMIT_TOLERANCE = 3e-2
WANGZHANG_Q = 2.001
WANGZHANG_TOLERANCE = 1e-2
AUBIN_TALENTI_LIMIT_TOLERANCE = 1e-2
PRODUCT_LIMIT_Q2 = 1e6
PRODUCT_LIMIT_TOLERANCE = 1e-4
LARGE_SCAN_DIM = 30
NAGY_DIMENSIONS = (2, 3, 4, 6, 8, 10, 14, 28)

# (label, order) pairs for the Bessel zero checks
BESSEL_ORDERS = (('nu0p5', 0.5), ('nu1', 1.0), ('nu2', 2.0), ('nu2p5', 2.5), ('nu3', 3.0))


@dataclass(frozen=True)
class Claim:
    """A named check: check(claim_id, tolerance_multiplier, *args) -> VerificationRecord."""

    claim_id: str
    check: Callable[..., VerificationRecord]
    args: Tuple[Any, ...] = ()

    def evaluate(self, tolerance_multiplier: float = 1.0) -> VerificationRecord:
        return self.check(self.claim_id, tolerance_multiplier, *self.args)


# ==================== CHECK HELPERS ====================

def _published(claim_id: str, tol_mult: float, key: str, compute: Callable[[], Value]) -> VerificationRecord:
    ref = reference(key)
    return check_close(claim_id, f"{ref.provenance} = {ref.value}", compute(), ref.expected,
                       ref.scaled_tolerance(tol_mult), absolute=ref.absolute)


def _agree(
    claim_id: str,
    tol_mult: float,
    description: str,
    compute: Callable[[], Value],
    oracle: Callable[[], Value],
    tolerance: float,
    absolute: bool = False,
) -> VerificationRecord:
    return check_close(claim_id, description, compute(), oracle(), tolerance * tol_mult, absolute=absolute)


def _relation(
    claim_id: str,
    tol_mult: float,
    description: str,
    lhs: Callable[[], Value],
    relation: Relation,
    rhs: Callable[[], Value],
) -> VerificationRecord:
    return check_relation(claim_id, description, lhs(), relation, rhs())


def _constant(x: float) -> Value:
    # Thresholds are taken as stated, with no rounding allowance
    return Value(x)


def _magnitude(v: Value) -> Value:
    return Value(abs(v.estimate), v.err, v.method)


def _value_of(bound_factory: Callable[..., Any], *args) -> Value:
    return bound_factory(*args).value


# ==================== TABLES ====================

def _direct_tilde_quotient(n: int) -> Value:
    return gamma_tilde(n) / gamma_tilde(n - 1)


def tables_claims() -> List[Claim]:
    """Published cₙ, γ̃ₙ and γ̃ quotient tables."""
    claims = []
    for n in range(3, MAX_SERIES_N + 1):
        claims.append(Claim(f"tables.cn.n{n:02d}", _published, (f"cn.n{n:02d}", partial(cn_hurwitz, n))))
    for n in sorted(QUOTIENT_FORMS):
        claims.append(Claim(f"tables.cn_quotient.n{n:02d}", _published,
                            (f"cn.n{n:02d}", partial(cn_quotient_closed_form, n))))
    for n in range(1, MAX_SERIES_N + 1):
        claims.append(Claim(f"tables.gamma_tilde.n{n:02d}", _published,
                            (f"gamma_tilde.n{n:02d}", partial(gamma_tilde, n))))
    for n in range(4, MAX_SERIES_N + 1):
        claims.append(Claim(f"tables.gamma_tilde_quotient.n{n:02d}", _published,
                            (f"gamma_tilde_quotient.n{n:02d}", partial(gamma_tilde_quotient, n))))
    for n in range(2, MAX_SERIES_N + 1):
        claims.append(Claim(
            f"tables.quotient_codings.n{n:02d}", _agree,
            (f"γ̃_{n}/γ̃_{n - 1} from c_{n - 1}/c_{n} agrees with the direct quotient",
             partial(gamma_tilde_quotient, n), partial(_direct_tilde_quotient, n), IDENTITY_TOLERANCE),
        ))
    return claims


# ==================== SERIES AND WEYL ====================

def _cn_quotient_value(n: int) -> Value:
    return cn_hurwitz(n) / cn_hurwitz(n - 1)


def _weyl_composed(n: int, k: int) -> Value:
    return weyl_product(weyl_heisenberg(n), 2 * n + 2, weyl_euclidean(k), k)


def _singular_quotient(claim_id: str, tol_mult: float, m: int) -> VerificationRecord:
    denominator = gamma_tilde_quotient_denominator(m)
    try:
        gamma_tilde_quotient_upper(m)
        raised = False
    except SingularityError:
        raised = True
    return check_true(claim_id, f"γ̃ quotient bound at m = {m} is singular (denominator {denominator:.6g})",
                      raised, margin=-denominator)


def series_claims() -> List[Claim]:
    """Dual cₙ oracle, exact values, Weyl constants and the quotient floors."""
    claims = []
    for n in range(1, MAX_SERIES_N + 1):
        claims.append(Claim(
            f"series.dual.n{n:02d}", _agree,
            (f"c_{n}: direct series agrees with the Hurwitz reduction within their errors",
             partial(cn_series, n, SERIES_TOLERANCE), partial(cn_hurwitz, n), 0.0),
        ))
    claims.append(Claim("series.exact.n01", _agree,
                        ("c_1 = π²/8", partial(cn_hurwitz, 1), partial(_constant, math.pi ** 2 / 8.0),
                         TIGHT_TOLERANCE)))
    claims.append(Claim("series.exact.n02", _agree,
                        ("c_2 = π²/48", partial(cn_hurwitz, 2), partial(_constant, math.pi ** 2 / 48.0),
                         TIGHT_TOLERANCE)))
    for n in range(1, 11):
        claims.append(Claim(f"series.closed_form.n{n:02d}", _agree,
                            (f"c_{n} closed form agrees with the Hurwitz reduction",
                             partial(cn_closed_form, n), partial(cn_hurwitz, n), IDENTITY_TOLERANCE)))
    for n in sorted(QUOTIENT_FORMS):
        claims.append(Claim(f"series.quotient_chain.n{n:02d}", _agree,
                            (f"c_{n} from the quotient chain agrees with the Hurwitz reduction",
                             partial(cn_quotient_closed_form, n), partial(cn_hurwitz, n), IDENTITY_TOLERANCE)))

    claims.append(Claim("series.weyl.h1", _agree,
                        ("W(H1) = 1/128", partial(weyl_heisenberg, 1), partial(_constant, 1.0 / 128.0),
                         TIGHT_TOLERANCE)))
    claims.append(Claim("series.weyl.h2", _agree,
                        ("W(H2) = 1/(2304π)", partial(weyl_heisenberg, 2),
                         partial(_constant, 1.0 / (2304.0 * math.pi)), TIGHT_TOLERANCE)))
    claims.append(Claim("series.weyl.h3", _agree,
                        ("W(H3) = (12 − π²)/(2⁷·768·π²)", partial(weyl_heisenberg, 3),
                         weyl_heisenberg_h3_closed_form, TIGHT_TOLERANCE)))
    for n in range(1, 6):
        for k in range(1, 11):
            claims.append(Claim(
                f"series.composition.n{n}k{k:02d}", _agree,
                (f"W(H{n}xR{k}) agrees with the product rule", partial(weyl_hn_rk, GroupSpec(n, k)),
                 partial(_weyl_composed, n, k), TIGHT_TOLERANCE),
            ))

    for n in range(2, MAX_SERIES_N + 1):
        claims.append(Claim(f"series.quotient_floor.n{n:02d}", _relation,
                            (f"c_{n}/c_{n - 1} ≥ (n−1)⁻¹ min θ_{n}(m)", partial(_cn_quotient_value, n),
                             Relation.GE, partial(series_quotient_floor, n))))
    for m in (2, 3):
        claims.append(Claim(f"series.gamma_tilde_quotient_singular.m{m:02d}", _singular_quotient, (m,)))
    for m in range(4, MAX_SERIES_N + 1):
        claims.append(Claim(f"series.gamma_tilde_quotient_upper.m{m:02d}", _relation,
                            (f"γ̃_{m}/γ̃_{m - 1} below its analytic upper bound", partial(_direct_tilde_quotient, m),
                             Relation.LE, partial(gamma_tilde_quotient_upper, m))))
        claims.append(Claim(f"series.corridor.m{m:02d}", _relation,
                            (f"γ̃_{m}/γ̃_{m - 1} ≥ 4e⁻²", partial(_direct_tilde_quotient, m),
                             Relation.GE, partial(_constant, 4.0 * math.exp(-2.0)))))
    return claims


# ==================== BESSEL ====================

def _bessel_residual(nu: float) -> Value:
    return _magnitude(bessel_j(nu, bessel_first_zero(nu).estimate))


def _zero_ratio_record(claim_id: str, tol_mult: float, m: int) -> VerificationRecord:
    ratio = bessel_first_zero(m - 1.0) / bessel_first_zero(float(m))
    return check_relation(claim_id, f"j_({m - 1},1)/j_({m},1) < exp(−1/(√m(√(m+1)+1))) at m = {m}",
                          ratio, Relation.LT, bessel_zero_ratio_bound(m))


def _bracket_record(claim_id: str, tol_mult: float, nu: int) -> VerificationRecord:
    bracket = bessel_zero_bracket(float(nu))
    zero = bessel_first_zero(float(nu))
    margin = min(zero.lower - bracket.lower, bracket.upper - zero.upper)
    return check_true(claim_id, f"Lo/Chambers bracket [{bracket.lower:.6f}, {bracket.upper:.6f}] holds j_({nu},1)",
                      margin > 0, margin=margin)


def bessel_claims() -> List[Claim]:
    """Published zeros, residuals, the zero-ratio bound and the zero brackets."""
    claims = [
        Claim("bessel.zero.j1", _published, ('bessel.j1', partial(bessel_first_zero, 1.0))),
        Claim("bessel.zero.j2", _published, ('bessel.j2', partial(bessel_first_zero, 2.0))),
        Claim("bessel.zero.j3", _published, ('bessel.j3', partial(bessel_first_zero, 3.0))),
        Claim("bessel.zero.j2_fine", _published, ('bessel.j2_fine', partial(bessel_first_zero, 2.0))),
        Claim("bessel.zero.j5half", _published, ('bessel.j5half', partial(bessel_first_zero, 2.5))),
        Claim("bessel.half_order", _agree,
              ("j_(1/2,1) = π", partial(bessel_first_zero, 0.5), partial(_constant, math.pi), RESIDUAL_LIMIT)),
    ]
    for label, nu in BESSEL_ORDERS:
        claims.append(Claim(f"bessel.residual.{label}", _relation,
                            (f"|J_{nu}(j_({nu},1))| ≤ 1e-9", partial(_bessel_residual, nu),
                             Relation.LE, partial(_constant, RESIDUAL_LIMIT))))
    for m in range(1, 101):
        claims.append(Claim(f"bessel.ratio.m{m:03d}", _zero_ratio_record, (m,)))
    for nu in range(1, 201):
        claims.append(Claim(f"bessel.bracket.nu{nu:03d}", _bracket_record, (nu,)))
    return claims


# ==================== HPS ====================

def _hps_gap(d: int) -> Value:
    return _magnitude(gamma_euclidean_ratio(d) - 2.0 / math.e)


def hps_claims() -> List[Claim]:
    """γ(ℝᵈ) decreases and its consecutive ratio approaches 2/e."""
    claims = []
    for d in range(2, 201):
        claims.append(Claim(f"hps.decrease.d{d:03d}", _relation,
                            (f"γ(R{d + 1}) < γ(R{d})", partial(gamma_euclidean, d + 1),
                             Relation.LT, partial(gamma_euclidean, d))))
    claims.append(Claim("hps.limit.d200", _agree,
                        ("γ(R201)/γ(R200) is within 3e-2 of 2/e", partial(gamma_euclidean_ratio, 200),
                         partial(_constant, 2.0 / math.e), HPS_LIMIT_TOLERANCE, True)))
    for d in (50, 100):
        claims.append(Claim(f"hps.gap.d{d:03d}", _relation,
                            (f"|ratio − 2/e| shrinks from d = {d} to d = {2 * d}", partial(_hps_gap, 2 * d),
                             Relation.LT, partial(_hps_gap, d))))
    return claims


# ==================== MAINCOMP ====================

def maincomp_groups() -> List[GroupSpec]:
    """The groups whose Pleijel bound is proven below 1, ordered by (n, k)."""
    groups = {GroupSpec(n, 0) for n in range(4, MAX_SERIES_N + 1)}
    groups.update(GroupSpec(n, 1) for n in range(2, MAX_SERIES_N + 1))
    groups.update(GroupSpec(1, k) for k in range(2, 21))
    groups.update(GroupSpec(2, k) for k in range(1, 21))
    return sorted(groups)


def _best_bound_record(claim_id: str, tol_mult: float, n: int, k: int) -> VerificationRecord:
    best = best_gamma_bound(GroupSpec(n, k), Hypothesis.UNCONDITIONAL)
    return check_relation(claim_id, f"γ(H{n}xR{k}) < 1 via {best.winner.value}",
                          best.bound.value, Relation.LT, 1.0)


def _scan_claim(claim_id: str, tol_mult: float, n: int, k: int) -> VerificationRecord:
    return scan_record(GroupSpec(n, k))


def _stirling_claim(claim_id: str, tol_mult: float, x: int) -> VerificationRecord:
    return stirling_record(x)


def _stirling_fit_claim(claim_id: str, tol_mult: float) -> VerificationRecord:
    return stirling_fit_record()


def _iso_route_gamma(n: int) -> Value:
    Q = 2 * n + 2
    return gamma_from(fk_from_iso(iso_lower_heisenberg(n), Q), weyl_heisenberg(n), Q).value


def _fk_iso_route(n: int) -> Value:
    return fk_from_iso(iso_lower_heisenberg(n), 2 * n + 2).value


def _k1_factor(Q: int) -> Value:
    return Value(lifting_k1_factor(Q))


def maincomp_claims() -> List[Claim]:
    """Unconditional Pleijel bounds with their isoperimetric and Faber–Krahn ingredients."""
    claims = []
    for g in maincomp_groups():
        claims.append(Claim(f"maincomp.gamma.n{g.n:02d}k{g.k:02d}", _best_bound_record, (g.n, g.k)))

    claims.extend([
        Claim("maincomp.published.h3r1", _published,
              ('maincomp.h3r1', partial(_value_of, pleijel_lifting_bound, GroupSpec(3, 1)))),
        Claim("maincomp.published.h1r2", _published,
              ('maincomp.h1r2', partial(_value_of, pleijel_iso_bound, GroupSpec(1, 2)))),
        Claim("maincomp.published.h2r1", _published,
              ('maincomp.h2r1', partial(_value_of, pleijel_iso_bound, GroupSpec(2, 1)))),
        Claim("maincomp.specialized.n1k2", _agree,
              ("Specialised form for H1xR2 matches the isoperimetric route", partial(maincomp_specialized, 1, 2),
               partial(_value_of, pleijel_iso_bound, GroupSpec(1, 2)), IDENTITY_TOLERANCE)),
        Claim("maincomp.specialized.n2k1", _agree,
              ("Specialised form for H2xR matches the isoperimetric route", partial(maincomp_specialized, 2, 1),
               partial(_value_of, pleijel_iso_bound, GroupSpec(2, 1)), IDENTITY_TOLERANCE)),
        Claim("maincomp.k0_routes.h1", _agree,
              ("Isoperimetric Pleijel bound on H1 equals γ from the Faber–Krahn route",
               partial(_value_of, pleijel_iso_bound, GroupSpec(1, 0)), partial(_iso_route_gamma, 1),
               IDENTITY_TOLERANCE)),
    ])
    for Q in range(3, 31):
        claims.append(Claim(f"maincomp.k1_factor.q{Q:02d}", _relation,
                            (f"2((Q−1)/(Q+1))^((Q−1)/2) ≤ 1 at Q = {Q}", partial(_k1_factor, Q),
                             Relation.LE, partial(_constant, 1.0))))

    claims.extend([
        Claim("maincomp.iso.h1_lower", _published,
              ('isoperimetry.h1_lower', partial(_value_of, iso_lower_heisenberg, 1))),
        Claim("maincomp.iso.h1_pansu", _published,
              ('isoperimetry.h1_pansu', partial(_value_of, pansu_isoperimetric, 1))),
        Claim("maincomp.iso.order_original", _relation,
              ("(8π/3)^(1/4) < unconditional I(H1) bound", pansu_original_constant, Relation.LT,
               partial(_value_of, iso_lower_heisenberg, 1))),
        Claim("maincomp.iso.order_pansu", _relation,
              ("unconditional I(H1) bound < Pansu's value", partial(_value_of, iso_lower_heisenberg, 1),
               Relation.LT, partial(_value_of, pansu_isoperimetric, 1))),
        Claim("maincomp.bathtub.closed_form", _agree,
              ("C_1' agrees with 2⁻¹3^(9/8)π^(3/4)", partial(bathtub_constant, 1), bathtub_constant_closed_form,
               TIGHT_TOLERANCE)),
        Claim("maincomp.bathtub.oracle_n1", _agree,
              ("Quadrature oracle agrees with C_1'", partial(bathtub_oracle, 1), partial(bathtub_constant, 1),
               QUADRATURE_TOLERANCE)),
        Claim("maincomp.bathtub.oracle_n2", _agree,
              ("Quadrature oracle agrees with C_2'", partial(bathtub_oracle, 2), partial(bathtub_constant, 2),
               QUADRATURE_TOLERANCE)),
        Claim("maincomp.fk.h1", _published, ('faber_krahn.h1', partial(_fk_iso_route, 1))),
        Claim("maincomp.fk.h2", _published, ('faber_krahn.h2', partial(_fk_iso_route, 2))),
        Claim("maincomp.unsatisfactory.h1", _published, ('unsatisfactory.h1', partial(_iso_route_gamma, 1))),
        Claim("maincomp.unsatisfactory.h2", _published, ('unsatisfactory.h2', partial(_iso_route_gamma, 2))),
    ])
    for d in range(2, 41):
        claims.append(Claim(f"maincomp.fk_equality.d{d:02d}", _agree,
                            (f"Symmetrization is sharp on R{d}", partial(_value_of, fk_iso_equality, d),
                             partial(fk_euclidean, d), IDENTITY_TOLERANCE)))

    for g in scan_groups(LARGE_SCAN_DIM):
        claims.append(Claim(f"maincomp.largedim.n{g.n:02d}k{g.k:02d}", _scan_claim, (g.n, g.k)))
    for x in STIRLING_POINTS:
        claims.append(Claim(f"maincomp.stirling.x{x:03d}", _stirling_claim, (x,)))
    claims.append(Claim("maincomp.stirling.fitted", _stirling_fit_claim))
    return claims


# ==================== PANSU ====================

def _alpha_quotient_record(claim_id: str, tol_mult: float) -> VerificationRecord:
    worst_m, worst = max(((m, alpha_quotient(m)) for m in range(2, MAX_ALPHA_M + 1)),
                         key=lambda item: item[1].estimate)
    return check_relation(claim_id, f"α_m/α_(m−1) < e²/4 for m = 2..{MAX_ALPHA_M} (largest at m = {worst_m})",
                          worst, Relation.LT, ALPHA_QUOTIENT_CEILING)


def _epsilon_polynomial_record(claim_id: str, tol_mult: float) -> VerificationRecord:
    worst = max(alpha_quotient_epsilon_polynomial(i / 1000.0) for i in range(1, 501))
    return check_relation(claim_id, "−4 − ε + 12ε² + 9ε³ ≤ 0 on (0, 1/2]", Value(worst), Relation.LE, 0.0)


def _inverse_denominator(m: int) -> Value:
    return 1.0 / exact(gamma_tilde_quotient_denominator(m))


def _fk_pansu_iso(n: int) -> Value:
    return fk_from_iso(pansu_isoperimetric(n), 2 * n + 2).value


def _criterion_record(claim_id: str, tol_mult: float) -> VerificationRecord:
    gamma_h1 = pleijel_pansu(1).estimate
    holds, margin = example_criterion(1.0, 1.0, 1.0 / gamma_h1)
    return check_true(claim_id, "Constant-curl criterion holds with the Pansu-conditional γ(H1)",
                      holds, margin=margin)


def _pansu_best_record(claim_id: str, tol_mult: float, n: int) -> VerificationRecord:
    best = best_gamma_bound(GroupSpec(n, 0), Hypothesis.PANSU_CONJECTURE)
    return check_relation(claim_id, f"Under Pansu's conjecture γ(H{n}) < 1 via {best.winner.value}",
                          best.bound.value, Relation.LT, 1.0)


def pansu_claims() -> List[Claim]:
    """Pansu-conditional bounds and the quotient machinery behind them."""
    claims = []
    for n in (1, 2, 3):
        claims.append(Claim(f"pansu.gamma.n{n:02d}", _published,
                            (f"pansu.n{n:02d}", partial(_value_of, pleijel_pansu, n))))
        claims.append(Claim(f"pansu.best.n{n:02d}", _pansu_best_record, (n,)))
    claims.extend([
        Claim("pansu.base_product", _published, ('pansu.base_product', pansu_base_product)),
        Claim("pansu.base_product_closed_form", _agree,
              ("γ(R4)α_1γ̃_1 = 2⁵3³/(j_(1,1)⁴π²)", pansu_base_product, pansu_base_product_closed_form,
               IDENTITY_TOLERANCE)),
        Claim("pansu.alpha_quotient.max", _alpha_quotient_record),
        Claim("pansu.alpha_epsilon", _epsilon_polynomial_record),
        Claim("pansu.denominator.m13", _published,
              ('pansu.denominator_m13', partial(_constant, gamma_tilde_quotient_denominator(13)))),
        Claim("pansu.inverse_denominator.m63", _published,
              ('pansu.inverse_denominator_m63', partial(_inverse_denominator, 63))),
        Claim("pansu.threshold", _published, ('pansu.threshold', partial(_constant, pansu_threshold_constant()))),
        Claim("pansu.criterion.h1", _criterion_record),
    ])
    for m in range(2, SMALL_M_LIMIT + 1):
        claims.append(Claim(f"pansu.small_m.m{m:02d}", _relation,
                            (f"γ(R{2 * m + 2})/γ(R{2 * m})·α_{m}/α_{m - 1} < 1", partial(pansu_step_quotient, m),
                             Relation.LT, partial(_constant, 1.0))))
    for m in range(34, 201):
        claims.append(Claim(f"pansu.combined.m{m:03d}", _relation,
                            (f"Combined quotient bound < 1 at m = {m}", partial(combined_quotient_upper, m),
                             Relation.LT, partial(_constant, 1.0))))
    for m in range(1, 11):
        claims.append(Claim(f"pansu.alpha_codings.m{m:02d}", _agree,
                            (f"α_{m} closed form agrees with its definition", partial(alpha, m),
                             partial(alpha_direct, m), IDENTITY_TOLERANCE)))
    for m in range(1, 201):
        claims.append(Claim(f"pansu.rd_quotient_upper.m{m:03d}", _relation,
                            (f"γ(R{2 * m + 2})/γ(R{2 * m}) below its closed-form bound", partial(gamma_rd_quotient, m),
                             Relation.LE, partial(gamma_rd_quotient_upper, m))))
    for n in range(1, 6):
        claims.append(Claim(f"pansu.fk_route.n{n:02d}", _agree,
                            (f"Explicit Pansu Faber–Krahn bound on H{n} matches the isoperimetric route",
                             partial(fk_pansu_route, n), partial(_fk_pansu_iso, n), IDENTITY_TOLERANCE)))
    return claims


# ==================== LIFTING ====================

def _nagy_at_lifting_exponent(Q: int) -> Value:
    return gn_nagy(2.0 * (Q + 1.0) / (Q - 1.0))


def _wangzhang_expression(q: float) -> Value:
    return exp(log(gn_nagy(q)) * (-q / (q - 2.0)))


def _sobolev_r3() -> Value:
    return exact(3.0 * (math.pi / 2.0) ** (4.0 / 3.0))


def _factor_product(n: int, k: int) -> Value:
    a, b, c = large_dimension_factors(n, k)
    return a * b * c


def _a_factor(n: int, k: int) -> Value:
    return large_dimension_factors(n, k)[0]


def lifting_claims() -> List[Claim]:
    """Gagliardo–Nirenberg identities and the lifting bound's structure."""
    claims = []
    for Q in NAGY_DIMENSIONS:
        claims.append(Claim(f"lifting.nagy.q{Q:03d}", _agree,
                            (f"Line constant at q = 2(Q+1)/(Q−1) matches its Q-form, Q = {Q}",
                             partial(_nagy_at_lifting_exponent, Q), partial(gn_nagy_Q, Q), TIGHT_TOLERANCE)))
    claims.extend([
        Claim("lifting.wangzhang.k1", _agree,
              (f"S_q^(−q/(q−2)) at q = {WANGZHANG_Q} is near (2/(πe))^(1/2)",
               partial(_wangzhang_expression, WANGZHANG_Q), partial(wangzhang_limit, 1), WANGZHANG_TOLERANCE)),
        Claim("lifting.sobolev.r3", _agree,
              ("C^Sob(R3) = 3(π/2)^(4/3)", partial(sobolev_euclidean, 3), _sobolev_r3, TIGHT_TOLERANCE)),
        Claim("lifting.aubin_talenti_limit.k300", _agree,
              ("Aubin–Talenti factor at k = 300 is near e/√2", partial(aubin_talenti_a_bound, 300),
               partial(_constant, math.e / math.sqrt(2.0)), AUBIN_TALENTI_LIMIT_TOLERANCE)),
        Claim("lifting.product_limit.q04", _agree,
              ("Partial product factor tends to (2e)^(−Q1/2), Q1 = 4",
               partial(pleijel_product_partial_factor, 4.0, PRODUCT_LIMIT_Q2),
               partial(pleijel_product_factor_limit, 4.0), PRODUCT_LIMIT_TOLERANCE)),
    ])
    for n in (1, 2, 3):
        for k in range(3, 7):
            g = GroupSpec(n, k)
            claims.append(Claim(f"lifting.symmetric.n{n}k{k}", _agree,
                                (f"Sobolev lift to {g} agrees with the symmetric form",
                                 partial(_value_of, sobolev_lift, g), partial(_value_of, sobolev_lift_symmetric, g),
                                 TIGHT_TOLERANCE)))
        for k in (1, 3, 4, 5):
            claims.append(Claim(f"lifting.decomposition.n{n}k{k}", _agree,
                                (f"a·b·c equals the lifting bound on H{n}xR{k}", partial(_factor_product, n, k),
                                 partial(_value_of, pleijel_lifting_bound, GroupSpec(n, k)), IDENTITY_TOLERANCE)))
    for n in range(1, MAX_SERIES_N + 1):
        g = GroupSpec(n, 1)
        claims.append(Claim(f"lifting.sobolev_k1.n{n:02d}", _agree,
                            (f"k = 1 Sobolev lift to {g} in closed form", partial(sobolev_lift_k1_form, n),
                             partial(_value_of, sobolev_lift, g), IDENTITY_TOLERANCE)))
        claims.append(Claim(f"lifting.pleijel_k1.n{n:02d}", _agree,
                            (f"γ̃_{n}·2((Q−1)/(Q+1))^((Q−1)/2) equals the lifting bound on {g}",
                             partial(pleijel_lifting_k1_form, n), partial(_value_of, pleijel_lifting_bound, g),
                             IDENTITY_TOLERANCE)))
    for k in range(3, 11):
        claims.append(Claim(f"lifting.aubin_talenti.k{k:03d}", _agree,
                            (f"Aubin–Talenti form of the a factor, k = {k}", partial(aubin_talenti_a_bound, k),
                             partial(_a_factor, 1, k), IDENTITY_TOLERANCE)))
    return claims
