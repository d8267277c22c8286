"""Shared domain model: groups, error-tracked values, directed bounds, records"""

from src.core.bound import (
    KNOWN_OPERATIONS,
    Bound,
    Direction,
    Hypothesis,
    Quantity,
    combined_hypothesis,
    exact_bound,
    lower_bound,
    reversed_direction,
)
from src.core.group import GroupSpec, homogeneous_dimension
from src.core.record import Relation, Status, VerificationRecord, check_close, check_relation, check_true
from src.core.value import Method, Value, as_value, exact

__all__ = [
    'KNOWN_OPERATIONS', 'Bound', 'Direction', 'Hypothesis', 'Quantity',
    'combined_hypothesis', 'exact_bound', 'lower_bound', 'reversed_direction',
    'GroupSpec', 'homogeneous_dimension',
    'Relation', 'Status', 'VerificationRecord', 'check_close', 'check_relation', 'check_true',
    'Method', 'Value', 'as_value', 'exact',
]
