"""Tests for the Sobolev and Gagliardo–Nirenberg constants and the lifting bounds"""

import math

import pytest
from hypothesis import given, strategies as st

from src.core.bound import Direction, Quantity
from src.core.group import GroupSpec
from src.core.value import Value, exp, log
from src.functional.gagliardo_nirenberg import (
    GNParams,
    critical_exponent,
    gn_from_sobolev,
    gn_nagy,
    gn_nagy_Q,
    gn_scaling,
    wangzhang_limit,
)
from src.functional.lifting import (
    best_sobolev_lift,
    lifting_exponent,
    product_sobolev,
    sobolev_lift,
    sobolev_lift_k1_form,
    sobolev_lift_symmetric,
)
from src.functional.sobolev import (
    sobolev_euclidean,
    sobolev_euclidean_bound,
    sobolev_heisenberg,
    sobolev_heisenberg_bound,
)
from src.utils.exceptions import DomainError, RangeError, RouteUnavailableError


# ==================== SOBOLEV ====================

class TestSobolev:

    def test_r3(self):
        assert sobolev_euclidean(3).estimate == pytest.approx(3.0 * (math.pi / 2.0) ** (4.0 / 3.0), rel=1e-13)

    def test_h1(self):
        # 4π / (2²·1!)^{1/2}
        assert sobolev_heisenberg(1).estimate == pytest.approx(2.0 * math.pi, rel=1e-13)

    def test_critical_inequality_needs_three_dimensions(self):
        with pytest.raises(DomainError):
            sobolev_euclidean(2)

    def test_bounds_are_exact(self):
        bound = sobolev_heisenberg_bound(2)
        assert bound.quantity == Quantity.SOBOLEV_CONST
        assert bound.direction == Direction.EXACT
        assert bound.group == GroupSpec(2, 0)
        assert sobolev_euclidean_bound(4).group == GroupSpec(0, 4)


# ==================== GAGLIARDO–NIRENBERG ====================

class TestGagliardoNirenberg:

    @pytest.mark.parametrize('Q', [2, 3, 4, 6, 8, 10, 14, 28])
    def test_line_constant_q_form(self, Q):
        q = 2.0 * (Q + 1.0) / (Q - 1.0)
        assert gn_nagy(q).estimate == pytest.approx(gn_nagy_Q(Q).estimate, rel=1e-12)

    def test_planar_lift_uses_sextic_exponent(self):
        assert gn_nagy_Q(2).estimate == pytest.approx(gn_nagy(6.0).estimate, rel=1e-12)

    def test_limit_towards_two(self):
        q = 2.001
        expression = exp(log(gn_nagy(q)) * (-q / (q - 2.0)))
        limit = wangzhang_limit(1)
        assert limit.estimate == pytest.approx(math.sqrt(2.0 / (math.pi * math.e)), rel=1e-13)
        assert expression.estimate == pytest.approx(limit.estimate, rel=1e-2)

    def test_nagy_domain(self):
        with pytest.raises(DomainError):
            gn_nagy(2.0)
        with pytest.raises(RangeError):
            gn_nagy(2e3)

    def test_from_sobolev_endpoints(self):
        assert gn_from_sobolev(3, 2.0).estimate == 1.0
        critical = gn_from_sobolev(3, critical_exponent(3))
        assert critical.estimate == pytest.approx(sobolev_euclidean(3).estimate, rel=1e-12)

    @pytest.mark.parametrize('k,q', [(2, 3.0), (3, 1.5), (3, 6.5)])
    def test_from_sobolev_domain(self, k, q):
        with pytest.raises(DomainError):
            gn_from_sobolev(k, q)

    @given(k=st.integers(min_value=3, max_value=40), t=st.floats(min_value=0.0, max_value=1.0))
    def test_from_sobolev_monotone_in_q(self, k, t):
        # C^Sob(ℝᵏ) > 1, so the bound grows with the exponent
        q = 2.0 + t * (critical_exponent(k) - 2.0)
        assert gn_from_sobolev(k, q).estimate >= 1.0

    def test_params(self):
        params = GNParams.create(3, 4.0)
        assert params.theta == pytest.approx(0.75)
        with pytest.raises(DomainError):
            GNParams.create(3, 7.0)
        with pytest.raises(DomainError):
            GNParams.create(1, 2.0)
        with pytest.raises(DomainError):
            GNParams(3, 4.0, 0.5)

    def test_scaling(self):
        assert gn_scaling(0.0, 2.0).estimate == pytest.approx(2.0)
        assert gn_scaling(0.5, Value(1.0)).estimate == pytest.approx(0.5)
        with pytest.raises(RangeError):
            gn_scaling(1.0, 1.0)


# ==================== LIFTING ====================

class TestLifting:

    def test_lifting_exponent(self):
        assert lifting_exponent(4, 1) == pytest.approx(10.0 / 3.0)

    @pytest.mark.parametrize('n', range(1, 8))
    def test_k1_closed_form(self, n):
        assert sobolev_lift_k1_form(n).estimate == pytest.approx(sobolev_lift(GroupSpec(n, 1)).estimate, rel=1e-10)

    @pytest.mark.parametrize('n,k', [(1, 3), (2, 4), (3, 6)])
    def test_symmetric_agrees_with_lift(self, n, k):
        g = GroupSpec(n, k)
        assert sobolev_lift(g).estimate == pytest.approx(sobolev_lift_symmetric(g).estimate, rel=1e-12)

    def test_lift_bound_shape(self):
        bound = sobolev_lift(GroupSpec(1, 1))
        assert bound.direction == Direction.LOWER
        assert bound.group == GroupSpec(1, 1)
        assert bound.route[0] == 'sobolev_heisenberg'
        assert bound.winner == 'sobolev_lift'
        assert 'gn_nagy_Q' in bound.route

    def test_no_lift_on_plane_factor(self):
        with pytest.raises(RouteUnavailableError):
            sobolev_lift(GroupSpec(1, 2))
        assert best_sobolev_lift(GroupSpec(1, 1)).winner == 'sobolev_lift'

    def test_lift_needs_both_factors(self):
        with pytest.raises(DomainError):
            sobolev_lift(GroupSpec(2, 0))
        with pytest.raises(DomainError):
            sobolev_lift_symmetric(GroupSpec(1, 1))

    def test_best_lift_is_largest(self):
        g = GroupSpec(2, 5)
        best = best_sobolev_lift(g)
        assert best.estimate >= sobolev_lift(g).estimate
        assert best.estimate >= sobolev_lift_symmetric(g).estimate

    def test_product_needs_dimension_three(self):
        with pytest.raises(DomainError):
            product_sobolev(Value(1.0), 2, Value(1.0), 4)
