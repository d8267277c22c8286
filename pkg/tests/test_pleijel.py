"""Tests for the Pleijel bounds, the Pansu quotients and the large-dimension scan"""

import math

import pytest
from hypothesis import given, strategies as st

from src.core.bound import Bound, Direction, Hypothesis, Quantity, exact_bound
from src.core.group import GroupSpec
from src.core.value import Value
from src.faberkrahn.routes import FKRouteName, fk_euclidean
from src.isoperimetry.constants import iso_lower_heisenberg, pansu_isoperimetric
from src.pleijel.bounds import (
    PleijelBound,
    best_gamma_bound,
    example_criterion,
    gamma_candidates,
    lifting_k1_factor,
    maincomp_specialized,
    pleijel_iso_bound,
    pleijel_lifting_bound,
    pleijel_lifting_k1_form,
    pleijel_pansu,
    pleijel_product_factor_limit,
    pleijel_product_partial_factor,
)
from src.pleijel.gamma import gamma_euclidean, gamma_from, gamma_tilde, gamma_tilde_quotient
from src.pleijel.quotients import (
    ALPHA_QUOTIENT_CEILING,
    SMALL_M_LIMIT,
    alpha,
    alpha_direct,
    alpha_quotient,
    alpha_quotient_epsilon_polynomial,
    bessel_zero_ratio_bound,
    combined_quotient_upper,
    gamma_rd_quotient,
    gamma_rd_quotient_upper,
    gamma_tilde_quotient_upper,
    pansu_base_product,
    pansu_base_product_closed_form,
    pansu_quotient_suite,
    pansu_step_quotient,
    pansu_threshold_constant,
)
from src.pleijel.scans import (
    OPEN_CASES,
    aubin_talenti_a_bound,
    fitted_stirling_constant,
    large_dimension_factors,
    large_dimension_scan,
    scan_groups,
    scan_record,
    stirling_remainder,
)
from src.specfun.bessel import bessel_first_zero
from src.utils.exceptions import DirectionError, DomainError, RangeError, RouteUnavailableError, SingularityError, \
    ValidationError
from src.weyl.constants import weyl_euclidean


def close_to(value, ref) -> bool:
    return abs(value.estimate - ref.value) <= ref.tolerance * abs(ref.value) + value.err


# ==================== GAMMA ====================

class TestGamma:

    def test_tilde_low_values(self):
        assert gamma_tilde(1).estimate == pytest.approx(32.0 / math.pi ** 2, rel=1e-12)
        assert gamma_tilde(2).estimate == pytest.approx(18.0 / math.pi ** 2, rel=1e-12)

    def test_tilde_tables(self, references):
        for n in range(1, 14):
            assert close_to(gamma_tilde(n), references[f"gamma_tilde.n{n:02d}"])
        for n in range(4, 14):
            assert close_to(gamma_tilde_quotient(n), references[f"gamma_tilde_quotient.n{n:02d}"])

    def test_tilde_values_where_tables_round_off(self):
        # the published tables show 0.3628 and 0.1195 here
        assert gamma_tilde(5).estimate == pytest.approx(0.36259119273497, rel=1e-10)
        assert gamma_tilde(7).estimate == pytest.approx(0.119573, rel=1e-5)
        assert gamma_tilde_quotient(6).estimate == pytest.approx(0.5761, rel=2e-4)
        assert gamma_tilde_quotient(7).estimate == pytest.approx(0.5725, rel=2e-4)

    def test_tilde_quotient_coding(self):
        for n in range(2, 14):
            direct = gamma_tilde(n).estimate / gamma_tilde(n - 1).estimate
            assert gamma_tilde_quotient(n).estimate == pytest.approx(direct, rel=1e-10)

    def test_euclidean_plane(self):
        # 4/j₀²
        assert gamma_euclidean(2).estimate == pytest.approx(4.0 / 2.404825557695773 ** 2, rel=1e-9)

    @pytest.mark.parametrize('d', [2, 3, 4, 9, 30])
    def test_euclidean_from_faber_krahn(self, d):
        fk = exact_bound(Quantity.FK_CONST, fk_euclidean(d), 'fk_euclidean', GroupSpec(0, d))
        bound = gamma_from(fk, weyl_euclidean(d), d)
        assert bound.direction == Direction.UPPER
        assert bound.estimate == pytest.approx(gamma_euclidean(d).estimate, rel=1e-10)

    def test_gamma_from_rejects_upper_fk(self):
        upper = Bound(Quantity.FK_CONST, Direction.UPPER, Value(10.0), route=('fk_from_iso',), group=GroupSpec(1, 0))
        with pytest.raises(DirectionError):
            gamma_from(upper, Value(1.0), 4)

    def test_euclidean_range(self):
        with pytest.raises(RangeError):
            gamma_euclidean(1)


# ==================== ROUTES ====================

class TestRoutes:

    def test_published_unconditional_bounds(self, references):
        assert close_to(pleijel_lifting_bound(GroupSpec(3, 1)), references['maincomp.h3r1'])
        assert close_to(pleijel_iso_bound(GroupSpec(1, 2)), references['maincomp.h1r2'])
        assert close_to(pleijel_iso_bound(GroupSpec(2, 1)), references['maincomp.h2r1'])

    def test_isoperimetric_route_fails_without_factor(self, references):
        for n in (1, 2):
            bound = pleijel_iso_bound(GroupSpec(n, 0))
            assert close_to(bound, references[f"unsatisfactory.h{n}"])
            assert bound.estimate > 1.0

    def test_published_pansu_bounds(self, references):
        for n in (1, 2, 3):
            bound = pleijel_pansu(n)
            assert close_to(bound, references[f"pansu.n{n:02d}"])
            assert bound.hypothesis == Hypothesis.PANSU_CONJECTURE
            assert 'pansu_isoperimetric' in bound.route

    def test_lifting_k1_form(self):
        for n in range(1, 8):
            lifted = pleijel_lifting_bound(GroupSpec(n, 1)).estimate
            assert pleijel_lifting_k1_form(n).estimate == pytest.approx(lifted, rel=1e-10)

    def test_k1_factor(self):
        assert lifting_k1_factor(3) == pytest.approx(1.0)
        factors = [lifting_k1_factor(Q) for Q in range(3, 31)]
        assert factors == sorted(factors, reverse=True)

    def test_no_lift_on_plane_factor(self):
        with pytest.raises(RouteUnavailableError):
            pleijel_lifting_bound(GroupSpec(1, 2))
        names = [c.name for c in gamma_candidates(GroupSpec(1, 2))]
        assert names == [FKRouteName.FROM_ISO_UNCONDITIONAL]

    @pytest.mark.parametrize('n,k', [(1, 0), (1, 3), (2, 0), (2, 5)])
    def test_specialized_form(self, n, k):
        assert maincomp_specialized(n, k).estimate == pytest.approx(pleijel_iso_bound(GroupSpec(n, k)).estimate,
                                                                    rel=1e-10)

    def test_specialized_form_with_pansu(self):
        conditional = pleijel_iso_bound(GroupSpec(1, 2), Hypothesis.PANSU_CONJECTURE)
        specialized = maincomp_specialized(1, 2, pansu_isoperimetric(1))
        assert specialized.estimate == pytest.approx(conditional.estimate, rel=1e-10)
        with pytest.raises(DomainError):
            maincomp_specialized(3, 0)


class TestBestBound:

    def test_open_cases_stay_above_courant(self):
        for n, k in sorted(OPEN_CASES):
            best = best_gamma_bound(GroupSpec(n, k))
            assert best.is_open
            assert best.headline == 1.0

    def test_h1_r2(self):
        best = best_gamma_bound(GroupSpec(1, 2))
        assert best.winner == FKRouteName.FROM_ISO_UNCONDITIONAL
        assert not best.is_open
        assert best.bound.route[-1] == 'best_gamma_bound'
        assert best.bound.direction == Direction.UPPER

    def test_best_is_minimum(self):
        best = best_gamma_bound(GroupSpec(2, 3))
        assert best.bound.estimate == min(c.estimate for c in best.candidates)

    def test_pansu_closes_h1(self):
        best = best_gamma_bound(GroupSpec(1, 0), Hypothesis.PANSU_CONJECTURE)
        assert best.winner == FKRouteName.FROM_ISO_PANSU
        assert best.hypothesis == Hypothesis.PANSU_CONJECTURE
        assert best.bound.estimate < 1.0

    def test_euclidean_rejected(self):
        with pytest.raises(DomainError):
            best_gamma_bound(GroupSpec(0, 4))

    def test_needs_upper_bound(self):
        with pytest.raises(ValidationError):
            PleijelBound(GroupSpec(1, 0), iso_lower_heisenberg(1), FKRouteName.FROM_ISO_UNCONDITIONAL)


# ==================== PANSU QUOTIENTS ====================

class TestQuotients:

    def test_base_product(self, references):
        ref = references['pansu.base_product']
        assert close_to(pansu_base_product(), ref)
        assert pansu_base_product().estimate == pytest.approx(pansu_base_product_closed_form().estimate, rel=1e-10)

    @pytest.mark.parametrize('m', range(1, 11))
    def test_alpha_codings(self, m):
        assert alpha(m).estimate == pytest.approx(alpha_direct(m).estimate, rel=1e-10)

    @pytest.mark.parametrize('m', [2, 3, 10, 100])
    def test_alpha_quotient(self, m):
        assert alpha_quotient(m).estimate == pytest.approx(alpha(m).estimate / alpha(m - 1).estimate, rel=1e-10)
        assert alpha_quotient(m).estimate <= ALPHA_QUOTIENT_CEILING

    @given(epsilon=st.floats(min_value=1e-9, max_value=0.5))
    def test_epsilon_polynomial_non_positive(self, epsilon):
        assert alpha_quotient_epsilon_polynomial(epsilon) <= 0.0

    @pytest.mark.parametrize('m', [1, 2, 5, 20, 100, 199])
    def test_rd_quotient(self, m):
        direct = gamma_euclidean(2 * m + 2).estimate / gamma_euclidean(2 * m).estimate
        assert gamma_rd_quotient(m).estimate == pytest.approx(direct, rel=1e-9)
        assert gamma_rd_quotient(m).upper <= gamma_rd_quotient_upper(m).lower

    @pytest.mark.parametrize('m', [1, 2, 10, 100])
    def test_zero_ratio_bound(self, m):
        ratio = bessel_first_zero(m - 1.0).estimate / bessel_first_zero(float(m)).estimate
        assert ratio <= bessel_zero_ratio_bound(m)

    def test_step_quotient_below_one_up_to_threshold(self):
        steps = [pansu_step_quotient(m) for m in range(2, SMALL_M_LIMIT + 1)]
        assert all(step.upper < 1.0 for step in steps)
        estimates = [step.estimate for step in steps]
        assert estimates == sorted(estimates)
        assert estimates[-1] == pytest.approx(0.9008, abs=2e-3)
        assert estimates[0] == pytest.approx(gamma_rd_quotient(2).estimate * alpha_quotient(2).estimate)

    def test_step_quotient_range(self):
        with pytest.raises(RangeError):
            pansu_step_quotient(SMALL_M_LIMIT + 1)
        with pytest.raises(RangeError):
            pansu_step_quotient(1)

    @pytest.mark.parametrize('m', [2, 3])
    def test_small_indices_singular(self, m):
        with pytest.raises(SingularityError):
            gamma_tilde_quotient_upper(m)
        assert pansu_quotient_suite(m).singular

    @pytest.mark.parametrize('m', [4, 13, 34, 200])
    def test_combined_bound_factorises(self, m):
        expected = (math.e ** 2 / 4.0) * gamma_rd_quotient_upper(m).estimate * gamma_tilde_quotient_upper(m).estimate
        assert combined_quotient_upper(m).estimate == pytest.approx(expected, rel=1e-13)

    def test_combined_bound_below_one_from_34(self):
        assert all(combined_quotient_upper(m).estimate < 1.0 for m in range(34, 201))

    def test_suite_row(self):
        row = pansu_quotient_suite(5)
        assert not row.singular
        assert row.gamma_tilde_quotient_direct is not None
        assert pansu_quotient_suite(20).gamma_tilde_quotient_direct is None

    def test_threshold(self, references):
        assert pansu_threshold_constant() == pytest.approx(references['pansu.threshold'].value, rel=1e-4)


# ==================== CRITERION AND PRODUCTS ====================

def test_example_criterion():
    holds, margin = example_criterion(1.0, 1.0, 2.0)
    assert holds
    assert margin == pytest.approx(1.0)
    assert example_criterion(1.0, 0.5, 1.0) == (False, -0.5)
    with pytest.raises(DomainError):
        example_criterion(0.0, 1.0, 1.0)


def test_product_factor_limit():
    partial = pleijel_product_partial_factor(4.0, 1e6).estimate
    assert partial == pytest.approx(pleijel_product_factor_limit(4.0).estimate, rel=1e-4)
    assert pleijel_product_factor_limit(4.0).estimate == pytest.approx((2.0 * math.e) ** -2.0, rel=1e-13)


# ==================== LARGE DIMENSION ====================

class TestScan:

    def test_scan_groups(self):
        assert scan_groups(6) == [GroupSpec(1, 0), GroupSpec(1, 1), GroupSpec(1, 2), GroupSpec(2, 0)]
        assert max(g.n for g in scan_groups(80)) == 13
        with pytest.raises(RangeError):
            scan_groups(5)

    def test_records(self):
        assert scan_record(GroupSpec(1, 0)).passed
        assert scan_record(GroupSpec(1, 2)).passed
        assert scan_record(GroupSpec(3, 4)).passed

    @pytest.mark.parametrize('n,k', [(1, 1), (2, 3), (3, 5)])
    def test_factor_decomposition(self, n, k):
        a, b, c = large_dimension_factors(n, k)
        assert (a * b * c).estimate == pytest.approx(pleijel_lifting_bound(GroupSpec(n, k)).estimate, rel=1e-10)

    def test_factors_need_lift(self):
        with pytest.raises(RouteUnavailableError):
            large_dimension_factors(1, 2)

    def test_aubin_talenti_limit(self):
        assert aubin_talenti_a_bound(300).estimate == pytest.approx(math.e / math.sqrt(2.0), rel=1e-2)

    def test_stirling(self):
        assert stirling_remainder(100) <= 1.0 / 600.0
        assert fitted_stirling_constant() <= 1.0 / 6.0

    def test_scan_reports_fitted_stirling_constant(self):
        records = {r.claim_id: r for r in large_dimension_scan(6)}
        fitted = records['maincomp.stirling.fitted']
        assert fitted.passed
        assert fitted.computed.estimate == pytest.approx(fitted_stirling_constant())
        assert fitted.expected.estimate == pytest.approx(1.0 / 6.0)
        assert f"{fitted_stirling_constant():.6g}" in fitted.description
