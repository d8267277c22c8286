"""Tests for the cₙ series and the Weyl constants"""

import math
from fractions import Fraction

import pytest

from src.core.group import GroupSpec
from src.core.value import Value
from src.utils.exceptions import CoefficientOverflowError, DomainError, RangeError, UnsupportedError, ValidationError
from src.weyl.cn import (
    MAX_SERIES_N,
    QUOTIENT_FORMS,
    CnMethod,
    CnResult,
    binomial_polynomial,
    cn,
    cn_closed_form,
    cn_hurwitz,
    cn_quotient,
    cn_quotient_closed_form,
    cn_series,
    series_quotient_floor,
    theta,
)
from src.weyl.constants import (
    weyl_euclidean,
    weyl_for,
    weyl_heisenberg,
    weyl_heisenberg_h3_closed_form,
    weyl_hn_rk,
    weyl_product,
)


def agree(a: Value, b: Value, rel: float = 0.0) -> bool:
    return abs(a.estimate - b.estimate) <= a.err + b.err + rel * abs(b.estimate)


# ==================== cₙ ====================

class TestCn:

    def test_exact_low_values(self):
        assert cn_hurwitz(1).estimate == pytest.approx(math.pi ** 2 / 8.0, rel=1e-13)
        assert cn_hurwitz(2).estimate == pytest.approx(math.pi ** 2 / 48.0, rel=1e-13)
        pi_sq = math.pi ** 2
        assert cn_hurwitz(3).estimate == pytest.approx(pi_sq * (12.0 - pi_sq) / 768.0, rel=1e-12)

    @pytest.mark.parametrize('n', range(1, 11))
    def test_closed_form_matches_hurwitz(self, n):
        assert agree(cn_closed_form(n), cn_hurwitz(n), rel=1e-10)

    @pytest.mark.parametrize('n', sorted(QUOTIENT_FORMS))
    def test_quotient_chain_matches_hurwitz(self, n):
        assert agree(cn_quotient_closed_form(n), cn_hurwitz(n), rel=1e-10)
        ratio = cn_hurwitz(n).estimate / cn_hurwitz(n - 1).estimate
        assert cn_quotient(n).estimate == pytest.approx(ratio, rel=1e-10)

    @pytest.mark.parametrize('n', [1, 2, 5, 9, 13])
    def test_direct_series_encloses_hurwitz(self, n):
        series = cn_series(n, 1e-5)
        assert series.err >= 0
        assert agree(series, cn_hurwitz(n))

    def test_published_table(self, references):
        for n in range(3, MAX_SERIES_N + 1):
            ref = references[f"cn.n{n:02d}"]
            assert cn_hurwitz(n).estimate == pytest.approx(ref.value, rel=ref.tolerance)

    def test_values_decrease(self):
        values = [cn_hurwitz(n).estimate for n in range(1, MAX_SERIES_N + 1)]
        assert values == sorted(values, reverse=True)

    def test_dispatch(self):
        for method in CnMethod:
            result = cn(4, method, 1e-5)
            assert isinstance(result, CnResult)
            assert result.method == method
            reference = cn_hurwitz(4)
            assert abs(result.value.estimate - reference.estimate) <= result.value.err + reference.err
        assert cn(12, 'closed_form_table').value.estimate == pytest.approx(cn_hurwitz(12).estimate, rel=1e-10)

    def test_result_must_be_positive(self):
        with pytest.raises(ValidationError):
            CnResult(1, Value(-1.0), CnMethod.HURWITZ_REDUCTION)

    def test_closed_form_unsupported_above_ten(self):
        with pytest.raises(UnsupportedError):
            cn_closed_form(11)
        with pytest.raises(UnsupportedError):
            cn_quotient_closed_form(14)

    def test_series_ranges(self):
        with pytest.raises(RangeError):
            cn_series(14, 1e-5)
        with pytest.raises(RangeError):
            cn_series(3, 1e-9)

    def test_hurwitz_coefficient_limit(self):
        with pytest.raises(CoefficientOverflowError):
            cn_hurwitz(41)
        with pytest.raises(RangeError):
            cn_hurwitz(0)

    @pytest.mark.parametrize('n', [1, 2, 3, 6, 11])
    def test_binomial_polynomial_is_exact(self, n):
        coefficients = binomial_polynomial(n)
        for m in range(0, 8):
            u = 2 * m + n
            value = sum(a * Fraction(u) ** j for j, a in enumerate(coefficients))
            assert value == math.comb(m + n - 1, n - 1)


class TestQuotientFloor:

    @pytest.mark.parametrize('n', range(2, MAX_SERIES_N + 1))
    def test_floor_below_quotient(self, n):
        ratio = cn_hurwitz(n) / cn_hurwitz(n - 1)
        floor = series_quotient_floor(n)
        assert floor.upper <= ratio.lower

    def test_theta_accepts_arrays(self):
        values = theta(3, [0, 1, 2])
        assert values.shape == (3,)
        assert values[0] == pytest.approx(theta(3, 0))
        # θ₃(0) = (2/3)(2/3)³
        assert theta(3, 0) == pytest.approx((2.0 / 3.0) ** 4)


# ==================== WEYL CONSTANTS ====================

class TestWeyl:

    def test_h1(self):
        assert weyl_heisenberg(1).estimate == pytest.approx(1.0 / 128.0, rel=1e-13)

    def test_h3_closed_form(self):
        assert agree(weyl_heisenberg(3), weyl_heisenberg_h3_closed_form(), rel=1e-12)

    def test_euclidean(self):
        assert weyl_euclidean(2).estimate == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-13)
        assert weyl_euclidean(1).estimate == pytest.approx(1.0 / math.pi, rel=1e-13)

    @pytest.mark.parametrize('n,k', [(1, 1), (1, 2), (2, 3), (3, 1), (5, 10)])
    def test_composition_rule(self, n, k):
        composed = weyl_product(weyl_heisenberg(n), 2 * n + 2, weyl_euclidean(k), k)
        assert weyl_hn_rk(GroupSpec(n, k)).estimate == pytest.approx(composed.estimate, rel=1e-12)

    def test_euclidean_products_compose(self):
        # ℝ² × ℝ³ = ℝ⁵
        product = weyl_product(weyl_euclidean(2), 2, weyl_euclidean(3), 3)
        assert product.estimate == pytest.approx(weyl_euclidean(5).estimate, rel=1e-12)

    def test_trivial_second_factor(self):
        w = weyl_heisenberg(2)
        assert weyl_product(w, 6, Value(1.0), 0).estimate == w.estimate

    def test_product_rejects_non_positive(self):
        with pytest.raises(DomainError):
            weyl_product(Value(-1.0), 4, Value(1.0), 1)

    def test_dispatch(self):
        assert weyl_for(GroupSpec(0, 3)) == weyl_euclidean(3)
        assert weyl_for(GroupSpec(2, 0)) == weyl_heisenberg(2)
        with pytest.raises(DomainError):
            weyl_hn_rk(GroupSpec(0, 2))
