"""
Faber–Krahn lower bounds.

C^FK(G) is bounded below either by the Sobolev constant or, after
symmetrization, by the isoperimetric constant:
C^FK ≥ I²·D⁻²·j²_{(D−2)/2,1} with D the homogeneous dimension.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List

from src.core.bound import Bound, Direction, Hypothesis, Quantity, exact_bound
from src.core.group import GroupSpec
from src.core.value import Value, exact, exp, log
from src.functional.lifting import best_sobolev_lift
from src.functional.sobolev import sobolev_heisenberg_bound
from src.isoperimetry.constants import iso_euclidean_bound, iso_lift, iso_lower_heisenberg, pansu_isoperimetric
from src.specfun.bessel import bessel_first_zero
from src.specfun.gamma import ln_gamma
from src.specfun.measures import ball_volume
from src.utils.exceptions import RouteUnavailableError, ValidationError
from src.utils.logger import get_logger
from src.utils.validators import validate_int_range

logger = get_logger('faberkrahn')

MAX_DIMENSION = 300


class FKRouteName(str, Enum):
    FROM_SOBOLEV_JL = 'FromSobolevJL'
    FROM_SOBOLEV_LIFT = 'FromSobolevLift'
    FROM_ISO_UNCONDITIONAL = 'FromIsoUnconditional'
    FROM_ISO_PANSU = 'FromIsoPansu'
    EUCLIDEAN_EXACT = 'EuclideanExact'


@dataclass(frozen=True)
class FKRoute:
    name: FKRouteName
    bound: Bound

    def __post_init__(self):
        object.__setattr__(self, 'name', FKRouteName(self.name))
        if self.bound.quantity != Quantity.FK_CONST:
            raise ValidationError("FKRoute needs an fk_const bound", field='bound')
        needs_pansu = self.name == FKRouteName.FROM_ISO_PANSU
        if needs_pansu != (self.bound.hypothesis == Hypothesis.PANSU_CONJECTURE):
            raise ValidationError(
                f"Route {self.name.value} has hypothesis {self.bound.hypothesis.value}",
                field='bound',
            )

    @property
    def estimate(self) -> float:
        return self.bound.estimate


def _first_zero(d: int) -> Value:
    """j_{(d−2)/2,1}; for d = 1 the zero of cos, π/2."""
    if d == 1:
        return exact(0.5 * math.pi)
    return bessel_first_zero((d - 2) / 2.0)


def fk_from_sobolev(c_sob: Bound) -> Bound:
    """C^FK ≥ C^Sob, on the same group."""
    c_sob.require(Quantity.SOBOLEV_CONST)
    return c_sob.derive(Quantity.FK_CONST, c_sob.value, 'fk_from_sobolev', relation=Direction.LOWER)


def fk_from_iso(iso: Bound, d: int) -> Bound:
    """
    C^FK ≥ I²·d⁻²·j²_{(d−2)/2,1} from an isoperimetric bound.

    Args:
        iso: Lower (or hypothesis-exact) bound on the isoperimetric constant
        d: Homogeneous dimension of iso's group

    Raises:
        DimensionMismatchError: If iso's group has a different homogeneous dimension
    """
    d = validate_int_range(d, 2, MAX_DIMENSION, 'd')
    iso.require(Quantity.ISO_CONST, Q=d)
    j = _first_zero(d)
    value = iso.value * iso.value * j * j / float(d * d)
    return iso.derive(Quantity.FK_CONST, value, 'fk_from_iso', relation=Direction.LOWER)


def fk_euclidean(d: int) -> Value:
    """C^FK(ℝᵈ) = ω_d^{2/d}·j²_{(d−2)/2,1} (π² on the line)."""
    d = validate_int_range(d, 1, MAX_DIMENSION, 'd')
    j = _first_zero(d)
    return exp(log(ball_volume(d)) * (2.0 / d)) * j * j


def fk_pansu_route(n: int) -> Value:
    """
    Faber–Krahn bound on ℍₙ from Pansu's constant, written out:
    (Q−2)²Γ((Q+1)/2)^{2/Q}π^{(Q−1)/Q}4^{2/Q}/(Q^{2/Q}(Q−1)²Γ(Q/2)^{4/Q})·j²_{(Q−2)/2,1}.
    """
    n = validate_int_range(n, 1, 50, 'n')
    Q = 2 * n + 2
    algebraic = (2.0 * math.log((Q - 2.0) / (Q - 1.0))
                 + (Q - 1.0) / Q * math.log(math.pi)
                 + (2.0 / Q) * math.log(4.0 / Q))
    j = bessel_first_zero((Q - 2) / 2.0)
    return exp(exact(algebraic) + ln_gamma((Q + 1) / 2.0) * (2.0 / Q) - ln_gamma(Q / 2.0) * (4.0 / Q)) * j * j


def fk_candidates(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> List[FKRoute]:
    """Every Faber–Krahn route available for ℍₙ×ℝᵏ under the hypothesis."""
    hypothesis = Hypothesis(hypothesis)
    if g.is_euclidean:
        return [FKRoute(FKRouteName.EUCLIDEAN_EXACT,
                        exact_bound(Quantity.FK_CONST, fk_euclidean(g.k), 'fk_euclidean', g))]

    candidates = []
    if g.k == 0:
        candidates.append(FKRoute(FKRouteName.FROM_SOBOLEV_JL, fk_from_sobolev(sobolev_heisenberg_bound(g.n))))
    else:
        try:
            candidates.append(FKRoute(FKRouteName.FROM_SOBOLEV_LIFT, fk_from_sobolev(best_sobolev_lift(g))))
        except RouteUnavailableError as e:
            logger.debug(f"{g}: {e.message}")

    candidates.append(FKRoute(
        FKRouteName.FROM_ISO_UNCONDITIONAL,
        fk_from_iso(iso_lift(g, iso_lower_heisenberg(g.n)), g.Q),
    ))
    if hypothesis == Hypothesis.PANSU_CONJECTURE:
        candidates.append(FKRoute(
            FKRouteName.FROM_ISO_PANSU,
            fk_from_iso(iso_lift(g, pansu_isoperimetric(g.n)), g.Q),
        ))
    return candidates


def fk_best(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> Bound:
    """
    The largest Faber–Krahn lower bound among fk_candidates.

    The route is the winner's derivation, then the name of every candidate
    route in fk_candidates order, then fk_best. Euclidean groups return the
    exact value with the same route layout.
    """
    candidates = fk_candidates(g, hypothesis)
    if not candidates:
        raise RouteUnavailableError('fk_best', f'no Faber–Krahn route for {g.label}')
    winner = max(candidates, key=lambda route: route.estimate)
    logger.debug(f"fk_best {g} ({Hypothesis(hypothesis).value}): {winner.name.value} {winner.estimate:.10g}")
    return winner.bound.with_route(*(c.name.value for c in candidates), 'fk_best')


def fk_best_route(g: GroupSpec, hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL) -> FKRoute:
    """The winning route of fk_best, with its name."""
    return max(fk_candidates(g, hypothesis), key=lambda route: route.estimate)


def fk_iso_equality(d: int) -> Bound:
    """fk_from_iso applied to the exact Euclidean isoperimetric constant."""
    return fk_from_iso(iso_euclidean_bound(d), d)
