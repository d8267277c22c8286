"""
Directed bounds on named constants.

A Bound records which constant it bounds, in which direction, under which
hypothesis, and the chain of operations that produced it. Bounds are only
transformed through Bound.derive, which owns the direction logic: pushing a
lower bound through a decreasing map yields an upper bound, and an
inequality step can never silently reverse a direction.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional, Tuple

from src.core.group import GroupSpec
from src.core.value import Value
from src.utils.exceptions import (
    DimensionMismatchError,
    DirectionError,
    QuantityMismatchError,
    ValidationError,
)


class Quantity(str, Enum):
    WEYL_CONST = 'weyl_const'
    SOBOLEV_CONST = 'sobolev_const'
    GN_CONST = 'gn_const'
    ISO_CONST = 'iso_const'
    FK_CONST = 'fk_const'
    PLEIJEL_CONST = 'pleijel_const'


class Direction(str, Enum):
    LOWER = 'lower'
    UPPER = 'upper'
    EXACT = 'exact'


class Hypothesis(str, Enum):
    UNCONDITIONAL = 'unconditional'
    PANSU_CONJECTURE = 'pansu_conjecture'


# Operation names that may appear in a route
KNOWN_OPERATIONS = frozenset({
    # weyl
    'cn_series', 'cn_hurwitz', 'cn_closed_form', 'weyl_heisenberg', 'weyl_euclidean',
    'weyl_hn_rk', 'weyl_product',
    # functional
    'sobolev_heisenberg', 'sobolev_euclidean', 'gn_nagy', 'gn_nagy_Q', 'gn_from_sobolev',
    'sobolev_lift', 'sobolev_lift_symmetric', 'product_sobolev', 'product_sobolev_asym',
    # isoperimetry
    'rep_constant', 'bathtub_constant', 'iso_lower_heisenberg', 'pansu_isoperimetric',
    'pansu_original_constant', 'iso_euclidean', 'iso_lift',
    # faberkrahn
    'fk_from_sobolev', 'fk_from_iso', 'fk_euclidean', 'fk_best', 'fk_pansu_route',
    # candidate route names listed by fk_best
    'FromSobolevJL', 'FromSobolevLift', 'FromIsoUnconditional', 'FromIsoPansu', 'EuclideanExact',
    # pleijel
    'gamma_from', 'gamma_tilde', 'gamma_euclidean', 'pleijel_lifting_bound',
    'pleijel_iso_bound', 'pleijel_pansu', 'best_gamma_bound', 'pleijel_product_bound',
    'maincomp_specialized',
})

PANSU_OPERATIONS = frozenset({'pansu_isoperimetric', 'pleijel_pansu'})


def reversed_direction(direction: Direction) -> Direction:
    if direction == Direction.LOWER:
        return Direction.UPPER
    if direction == Direction.UPPER:
        return Direction.LOWER
    return Direction.EXACT


def combined_hypothesis(*bounds: 'Bound') -> Hypothesis:
    """PansuConjecture if any input depends on it."""
    if any(b.hypothesis == Hypothesis.PANSU_CONJECTURE for b in bounds):
        return Hypothesis.PANSU_CONJECTURE
    return Hypothesis.UNCONDITIONAL


@dataclass(frozen=True)
class Bound:
    """A directed Value for a named quantity."""

    quantity: Quantity
    direction: Direction
    value: Value
    hypothesis: Hypothesis = Hypothesis.UNCONDITIONAL
    route: Tuple[str, ...] = field(default_factory=tuple)
    group: Optional[GroupSpec] = None

    def __post_init__(self):
        object.__setattr__(self, 'quantity', Quantity(self.quantity))
        object.__setattr__(self, 'direction', Direction(self.direction))
        object.__setattr__(self, 'hypothesis', Hypothesis(self.hypothesis))
        object.__setattr__(self, 'route', tuple(self.route))

        if not isinstance(self.value, Value):
            raise ValidationError("value must be a Value", field='value')
        if not self.route:
            raise ValidationError("route must be non-empty", field='route')
        unknown = [op for op in self.route if op not in KNOWN_OPERATIONS]
        if unknown:
            raise ValidationError(f"Unknown operations in route: {unknown}", field='route')
        if self.hypothesis == Hypothesis.PANSU_CONJECTURE and not PANSU_OPERATIONS.intersection(self.route):
            raise ValidationError(
                "A Pansu-conditional bound must pass through pansu_isoperimetric or pleijel_pansu",
                field='route',
            )

    @property
    def estimate(self) -> float:
        return self.value.estimate

    @property
    def err(self) -> float:
        return self.value.err

    @property
    def winner(self) -> str:
        """Operation that produced the final step."""
        return self.route[-1]

    def require(
        self,
        quantity: Quantity,
        directions: Iterable[Direction] = (Direction.LOWER, Direction.EXACT),
        group: Optional[GroupSpec] = None,
        Q: Optional[float] = None,
    ) -> 'Bound':
        """
        Check that this bound can feed an operation.

        Raises:
            QuantityMismatchError: Wrong quantity
            DirectionError: Direction not in directions
            DimensionMismatchError: Group or homogeneous dimension differ
        """
        if self.quantity != quantity:
            raise QuantityMismatchError(quantity.value, self.quantity.value)
        directions = tuple(directions)
        if self.direction not in directions:
            raise DirectionError('/'.join(d.value for d in directions), self.direction.value)
        if group is not None and self.group is not None and self.group != group:
            raise DimensionMismatchError(
                f"Bound is for {self.group}, expected {group}",
                {'expected': group.label, 'actual': self.group.label},
            )
        if Q is not None and self.group is not None and self.group.Q != Q:
            raise DimensionMismatchError(
                f"Bound has homogeneous dimension {self.group.Q}, expected {Q}",
                {'expected': Q, 'actual': self.group.Q},
            )
        return self

    def derive(
        self,
        quantity: Quantity,
        value: Value,
        operation: str,
        *,
        decreasing: bool = False,
        relation: Direction = Direction.EXACT,
        group: Optional[GroupSpec] = None,
        others: Tuple['Bound', ...] = (),
    ) -> 'Bound':
        """
        Build the bound obtained by pushing this one through an operation.

        Args:
            quantity: Quantity bounded by the result
            value: Result value
            operation: Operation name appended to the route
            decreasing: Whether the result decreases as this bound's quantity grows
            relation: LOWER if the target is only known to be >= the formula,
                UPPER if <=, EXACT for an identity
            group: Group of the result (defaults to this bound's group)
            others: Further input bounds whose hypotheses are inherited

        Raises:
            DirectionError: If the propagated direction contradicts the relation
        """
        propagated = reversed_direction(self.direction) if decreasing else self.direction
        relation = Direction(relation)
        if relation == Direction.EXACT or relation == propagated:
            direction = propagated
        elif propagated == Direction.EXACT:
            direction = relation
        else:
            raise DirectionError(relation.value, propagated.value)

        route = self.route
        for other in others:
            route = route + tuple(op for op in other.route if op not in route)
        return Bound(
            quantity=quantity,
            direction=direction,
            value=value,
            hypothesis=combined_hypothesis(self, *others),
            route=route + (operation,),
            group=group if group is not None else self.group,
        )

    def with_route(self, *operations: str) -> 'Bound':
        return replace(self, route=self.route + tuple(operations))


def exact_bound(quantity: Quantity, value: Value, operation: str, group: Optional[GroupSpec] = None) -> Bound:
    return Bound(quantity, Direction.EXACT, value, Hypothesis.UNCONDITIONAL, (operation,), group)


def lower_bound(quantity: Quantity, value: Value, operation: str, group: Optional[GroupSpec] = None) -> Bound:
    return Bound(quantity, Direction.LOWER, value, Hypothesis.UNCONDITIONAL, (operation,), group)
