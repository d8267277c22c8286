"""Tests for the Faber–Krahn routes"""

import math

import pytest

from src.core.bound import Direction, Hypothesis
from src.core.group import GroupSpec
from src.faberkrahn.routes import (
    FKRoute,
    FKRouteName,
    fk_best,
    fk_best_route,
    fk_candidates,
    fk_euclidean,
    fk_from_iso,
    fk_from_sobolev,
    fk_iso_equality,
    fk_pansu_route,
)
from src.functional.sobolev import sobolev_heisenberg, sobolev_heisenberg_bound
from src.isoperimetry.constants import iso_lower_heisenberg, pansu_isoperimetric
from src.utils.exceptions import DimensionMismatchError, QuantityMismatchError, ValidationError


def test_published_isoperimetric_route(references):
    for n in (1, 2):
        ref = references[f"faber_krahn.h{n}"]
        bound = fk_from_iso(iso_lower_heisenberg(n), 2 * n + 2)
        assert bound.estimate == pytest.approx(ref.value, rel=ref.tolerance)
        assert bound.direction == Direction.LOWER


def test_line_and_plane():
    assert fk_euclidean(1).estimate == pytest.approx(math.pi ** 2, rel=1e-13)
    # π·j₀²
    assert fk_euclidean(2).estimate == pytest.approx(math.pi * 2.404825557695773 ** 2, rel=1e-9)


@pytest.mark.parametrize('d', [2, 3, 4, 7, 12, 40])
def test_equality_case(d):
    assert fk_iso_equality(d).estimate == pytest.approx(fk_euclidean(d).estimate, rel=1e-10)


@pytest.mark.parametrize('n', range(1, 6))
def test_pansu_route_closed_form(n):
    via_iso = fk_from_iso(pansu_isoperimetric(n), 2 * n + 2)
    assert fk_pansu_route(n).estimate == pytest.approx(via_iso.estimate, rel=1e-10)
    assert via_iso.hypothesis == Hypothesis.PANSU_CONJECTURE


def test_from_sobolev_keeps_value():
    bound = fk_from_sobolev(sobolev_heisenberg_bound(1))
    assert bound.estimate == sobolev_heisenberg(1).estimate
    assert bound.route[-1] == 'fk_from_sobolev'
    with pytest.raises(QuantityMismatchError):
        fk_from_sobolev(iso_lower_heisenberg(1))


def test_from_iso_checks_dimension():
    with pytest.raises(DimensionMismatchError):
        fk_from_iso(iso_lower_heisenberg(1), 6)


def test_best_on_h1_uses_isoperimetry():
    route = fk_best_route(GroupSpec(1, 0))
    assert route.name == FKRouteName.FROM_ISO_UNCONDITIONAL
    best = fk_best(GroupSpec(1, 0))
    assert best.winner == 'fk_best'
    assert best.estimate == route.estimate
    assert best.route[-3:] == ('FromSobolevJL', 'FromIsoUnconditional', 'fk_best')
    assert best.route[:-3] == route.bound.route


def test_best_lists_every_candidate():
    g = GroupSpec(2, 1)
    best = fk_best(g, Hypothesis.PANSU_CONJECTURE)
    names = [c.name.value for c in fk_candidates(g, Hypothesis.PANSU_CONJECTURE)]
    assert list(best.route[-len(names) - 1:-1]) == names
    assert fk_best(GroupSpec(0, 3)).route == ('fk_euclidean', 'EuclideanExact', 'fk_best')


def test_candidates():
    names = [c.name for c in fk_candidates(GroupSpec(1, 2))]
    # no Sobolev lift onto a plane factor
    assert names == [FKRouteName.FROM_ISO_UNCONDITIONAL]

    names = [c.name for c in fk_candidates(GroupSpec(2, 1), Hypothesis.PANSU_CONJECTURE)]
    assert names == [FKRouteName.FROM_SOBOLEV_LIFT, FKRouteName.FROM_ISO_UNCONDITIONAL, FKRouteName.FROM_ISO_PANSU]

    euclidean = fk_candidates(GroupSpec(0, 3))
    assert [c.name for c in euclidean] == [FKRouteName.EUCLIDEAN_EXACT]
    assert fk_best(GroupSpec(0, 3)).direction == Direction.EXACT


def test_pansu_never_loses_to_unconditional():
    g = GroupSpec(2, 3)
    assert fk_best(g, Hypothesis.PANSU_CONJECTURE).estimate >= fk_best(g).estimate


def test_route_hypothesis_must_match_name():
    bound = fk_from_iso(iso_lower_heisenberg(1), 4)
    with pytest.raises(ValidationError):
        FKRoute(FKRouteName.FROM_ISO_PANSU, bound)
    with pytest.raises(ValidationError):
        FKRoute(FKRouteName.FROM_SOBOLEV_JL, iso_lower_heisenberg(1))
