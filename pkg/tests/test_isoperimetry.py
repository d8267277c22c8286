"""Tests for the isoperimetric constants and the bathtub quadrature"""

import math

import pytest

from src.core.bound import Bound, Direction, Hypothesis, Quantity
from src.core.group import GroupSpec
from src.core.value import Value
from src.isoperimetry.constants import (
    IsoValue,
    bathtub_constant,
    bathtub_constant_closed_form,
    iso_bound_for,
    iso_euclidean,
    iso_euclidean_bound,
    iso_lift,
    iso_lower_heisenberg,
    pansu_isoperimetric,
    pansu_original_constant,
    rep_constant,
)
from src.isoperimetry.quadrature import bathtub_oracle, sine_power_integral
from src.utils.exceptions import DimensionMismatchError, DirectionError, DomainError, RangeError, ValidationError


class TestHeisenberg:

    def test_published_h1_values(self, references):
        lower = references['isoperimetry.h1_lower']
        pansu = references['isoperimetry.h1_pansu']
        assert iso_lower_heisenberg(1).estimate == pytest.approx(lower.value, rel=lower.tolerance)
        assert pansu_isoperimetric(1).estimate == pytest.approx(pansu.value, rel=pansu.tolerance)

    @pytest.mark.parametrize('n', range(1, 11))
    def test_lower_bound_below_conjecture(self, n):
        assert iso_lower_heisenberg(n).value.upper < pansu_isoperimetric(n).value.lower

    def test_improves_on_first_bound(self):
        assert iso_lower_heisenberg(1).estimate > pansu_original_constant().estimate

    def test_rep_constant_h1(self):
        # 2⁻²·Γ(1/2)²/π² = 1/(4π)
        assert rep_constant(1).estimate == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-13)

    def test_bathtub_closed_form(self):
        assert bathtub_constant(1).estimate == pytest.approx(bathtub_constant_closed_form().estimate, rel=1e-12)

    def test_bounds_carry_hypothesis(self):
        lower = iso_lower_heisenberg(2)
        assert lower.direction == Direction.LOWER
        assert lower.hypothesis == Hypothesis.UNCONDITIONAL
        pansu = pansu_isoperimetric(2)
        assert pansu.direction == Direction.EXACT
        assert pansu.hypothesis == Hypothesis.PANSU_CONJECTURE


class TestQuadrature:

    def test_sine_power(self):
        assert sine_power_integral(2.0, 256).estimate == pytest.approx(math.pi / 2.0, rel=1e-12)
        assert sine_power_integral(1.0, 256).estimate == pytest.approx(2.0, rel=1e-12)

    @pytest.mark.parametrize('n', [1, 2])
    def test_bathtub_oracle_matches_gamma_form(self, n):
        oracle = bathtub_oracle(n, 512)
        assert oracle.estimate == pytest.approx(bathtub_constant(n).estimate, rel=1e-6)

    def test_oracle_range(self):
        with pytest.raises(RangeError):
            bathtub_oracle(3)
        with pytest.raises(RangeError):
            bathtub_oracle(1, 16)


class TestEuclideanAndLift:

    def test_euclidean_values(self):
        assert iso_euclidean(2).estimate == pytest.approx(2.0 * math.sqrt(math.pi), rel=1e-13)
        assert iso_euclidean(3).estimate == pytest.approx((36.0 * math.pi) ** (1.0 / 3.0), rel=1e-13)
        assert iso_euclidean_bound(3).direction == Direction.EXACT

    def test_lift_of_euclidean_value_is_euclidean(self):
        # a factor already at the Euclidean value lifts to the Euclidean value
        g = GroupSpec(1, 2)
        fake = Bound(Quantity.ISO_CONST, Direction.LOWER, iso_euclidean(4), route=('iso_lower_heisenberg',),
                     group=GroupSpec(1, 0))
        assert iso_lift(g, fake).estimate == pytest.approx(iso_euclidean(6).estimate, rel=1e-12)

    def test_lift_shape(self):
        lifted = iso_lift(GroupSpec(1, 3), iso_lower_heisenberg(1))
        assert lifted.group == GroupSpec(1, 3)
        assert lifted.direction == Direction.LOWER
        assert lifted.winner == 'iso_lift'
        assert iso_lift(GroupSpec(2, 0), iso_lower_heisenberg(2)) == iso_lower_heisenberg(2)

    def test_lift_inherits_pansu(self):
        lifted = iso_lift(GroupSpec(1, 1), pansu_isoperimetric(1))
        assert lifted.hypothesis == Hypothesis.PANSU_CONJECTURE
        assert lifted.estimate > iso_lift(GroupSpec(1, 1), iso_lower_heisenberg(1)).estimate

    def test_lift_checks_inputs(self):
        with pytest.raises(DimensionMismatchError):
            iso_lift(GroupSpec(2, 1), iso_lower_heisenberg(1))
        upper = Bound(Quantity.ISO_CONST, Direction.UPPER, Value(3.0), route=('iso_lower_heisenberg',),
                      group=GroupSpec(1, 0))
        with pytest.raises(DirectionError):
            iso_lift(GroupSpec(1, 1), upper)
        with pytest.raises(DomainError):
            iso_lift(GroupSpec(0, 2), iso_lower_heisenberg(1))

    def test_bound_for(self):
        assert iso_bound_for(GroupSpec(0, 3)).bound.direction == Direction.EXACT
        conditional = iso_bound_for(GroupSpec(2, 1), Hypothesis.PANSU_CONJECTURE)
        assert 'pansu_isoperimetric' in conditional.bound.route
        assert iso_bound_for(GroupSpec(2, 1)).bound.hypothesis == Hypothesis.UNCONDITIONAL

    def test_exact_heisenberg_value_rejected(self):
        exact_iso = Bound(Quantity.ISO_CONST, Direction.EXACT, Value(3.0), route=('iso_lower_heisenberg',),
                          group=GroupSpec(1, 0))
        with pytest.raises(ValidationError):
            IsoValue(GroupSpec(1, 0), exact_iso)
