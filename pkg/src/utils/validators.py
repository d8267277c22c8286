"""Input validation utilities"""

import math
from numbers import Integral, Real
from typing import Optional

from src.utils.exceptions import DomainError, RangeError


def validate_finite(value: float, param_name: str) -> float:
    """
    Validate that a parameter is a finite real number.

    Args:
        value: Value to check
        param_name: Parameter name for error message

    Returns:
        The value as float

    Raises:
        DomainError: If value is not a finite real
    """
    if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
        raise DomainError(f"{param_name} must be a finite real number", {param_name: repr(value)})
    return float(value)


def validate_integer(value, param_name: str) -> int:
    """Validate that a parameter is an integer (bool excluded)."""
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError(f"{param_name} must be an integer", {param_name: repr(value)})
    return int(value)


def validate_range(
    value: float,
    min_val: Optional[float],
    max_val: Optional[float],
    param_name: str,
    min_inclusive: bool = True,
) -> float:
    """
    Validate that a value lies within the supported range.

    Args:
        value: Value to validate
        min_val: Lower limit (None for no limit)
        max_val: Upper limit, inclusive (None for no limit)
        param_name: Parameter name for error message
        min_inclusive: Whether the lower limit itself is allowed

    Raises:
        RangeError: If value is out of range
    """
    value = validate_finite(value, param_name)
    too_small = min_val is not None and (value < min_val if min_inclusive else value <= min_val)
    too_large = max_val is not None and value > max_val
    if too_small or too_large:
        lower = '[' if min_inclusive else '('
        raise RangeError(
            f"{param_name} must be in {lower}{min_val}, {max_val}], got {value}",
            {param_name: value, 'min': min_val, 'max': max_val}
        )
    return value


def validate_int_range(value, min_val: Optional[int], max_val: Optional[int], param_name: str) -> int:
    """Validate an integer parameter against an inclusive range."""
    value = validate_integer(value, param_name)
    validate_range(value, min_val, max_val, param_name)
    return value
