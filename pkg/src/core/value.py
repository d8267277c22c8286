"""
Error-tracked real values.

A Value is a binary64 estimate together with an absolute error bound. All
arithmetic propagates the bound with first-order interval rules plus a small
rounding allowance, so that the true result always lies in
[estimate - err, estimate + err] when the operands' true values lie in theirs.
"""

import math
import sys
from dataclasses import dataclass, replace
from enum import Enum
from numbers import Real
from typing import Callable, Iterable, Union

from src.utils.exceptions import DomainError, ValidationError

EPS = sys.float_info.epsilon
ROUNDING_ULPS = 4


class Method(str, Enum):
    """How a value was obtained."""
    EXACT_FORMULA = 'exact_formula'
    SERIES = 'series'
    ROOT_FIND = 'root_find'
    QUADRATURE = 'quadrature'
    PUBLISHED_TABLE = 'published_table'


# Combining values keeps the least exact provenance
_METHOD_RANK = {
    Method.EXACT_FORMULA: 0,
    Method.SERIES: 1,
    Method.ROOT_FIND: 2,
    Method.QUADRATURE: 3,
    Method.PUBLISHED_TABLE: 4,
}


def _rounding(x: float) -> float:
    return ROUNDING_ULPS * EPS * abs(x)


def _merge_methods(a: Method, b: Method) -> Method:
    return a if _METHOD_RANK[a] >= _METHOD_RANK[b] else b


@dataclass(frozen=True)
class Value:
    """A real estimate with a non-negative absolute error bound."""

    estimate: float
    err: float = 0.0
    method: Method = Method.EXACT_FORMULA

    def __post_init__(self):
        if isinstance(self.estimate, bool) or not isinstance(self.estimate, Real):
            raise ValidationError("estimate must be a real number", field='estimate')
        if not isinstance(self.err, Real):
            raise ValidationError("err must be a real number", field='err')
        object.__setattr__(self, 'estimate', float(self.estimate))
        object.__setattr__(self, 'err', float(self.err))
        object.__setattr__(self, 'method', Method(self.method))
        if not math.isfinite(self.estimate):
            raise ValidationError(f"estimate must be finite, got {self.estimate}", field='estimate')
        if not math.isfinite(self.err) or self.err < 0:
            raise ValidationError(f"err must be finite and non-negative, got {self.err}", field='err')

    # ==================== PROPERTIES ====================

    @property
    def lower(self) -> float:
        return self.estimate - self.err

    @property
    def upper(self) -> float:
        return self.estimate + self.err

    @property
    def relative_err(self) -> float:
        if self.estimate == 0.0:
            return math.inf if self.err > 0 else 0.0
        return self.err / abs(self.estimate)

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def with_method(self, method: Method) -> 'Value':
        return replace(self, method=method)

    def widen(self, extra: float) -> 'Value':
        """Return a copy with err increased by a non-negative amount."""
        return replace(self, err=self.err + abs(extra))

    # ==================== ARITHMETIC ====================

    def __add__(self, other) -> 'Value':
        other = as_value(other)
        est = self.estimate + other.estimate
        return Value(est, self.err + other.err + _rounding(est), _merge_methods(self.method, other.method))

    __radd__ = __add__

    def __sub__(self, other) -> 'Value':
        other = as_value(other)
        est = self.estimate - other.estimate
        return Value(est, self.err + other.err + _rounding(est), _merge_methods(self.method, other.method))

    def __rsub__(self, other) -> 'Value':
        return as_value(other) - self

    def __neg__(self) -> 'Value':
        return replace(self, estimate=-self.estimate)

    def __mul__(self, other) -> 'Value':
        other = as_value(other)
        a, b = self.estimate, other.estimate
        est = a * b
        err = abs(a) * other.err + abs(b) * self.err + self.err * other.err + _rounding(est)
        return Value(est, err, _merge_methods(self.method, other.method))

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'Value':
        other = as_value(other)
        a, b = self.estimate, other.estimate
        if abs(b) <= other.err:
            raise DomainError("Divisor interval contains zero", {'divisor': b, 'err': other.err})
        est = a / b
        err = (abs(a) * other.err + abs(b) * self.err) / (abs(b) * (abs(b) - other.err)) + _rounding(est)
        return Value(est, err, _merge_methods(self.method, other.method))

    def __rtruediv__(self, other) -> 'Value':
        return as_value(other) / self

    def __pow__(self, p: float) -> 'Value':
        return power(self, p)

    def __float__(self) -> float:
        return self.estimate


Number = Union[Value, float, int]


def as_value(x: Number) -> Value:
    """Promote a plain number to an exact Value."""
    if isinstance(x, Value):
        return x
    return Value(float(x), 0.0, Method.EXACT_FORMULA)


def exact(x: float) -> Value:
    """A formula value carrying only its own rounding allowance."""
    return Value(x, _rounding(x), Method.EXACT_FORMULA)


def _monotone(f: Callable[[float], float], v: Value, lo_limit: float = -math.inf, name: str = 'f') -> Value:
    lo, hi = v.lower, v.upper
    if lo <= lo_limit:
        raise DomainError(f"{name} argument interval [{lo}, {hi}] leaves the domain", {'lower': lo})
    y = f(v.estimate)
    err = max(abs(f(lo) - y), abs(f(hi) - y)) + _rounding(y)
    return Value(y, err, v.method)


def exp(v: Number) -> Value:
    return _monotone(math.exp, as_value(v), name='exp')


def log(v: Number) -> Value:
    return _monotone(math.log, as_value(v), lo_limit=0.0, name='log')


def sqrt(v: Number) -> Value:
    return _monotone(math.sqrt, as_value(v), lo_limit=-EPS, name='sqrt')


def power(v: Number, p: float) -> Value:
    """v ** p for a positive interval v and constant real p."""
    v = as_value(v)
    if p == 0:
        return Value(1.0, 0.0, v.method)
    if float(p).is_integer() and p > 0:
        result = Value(1.0, 0.0, v.method)
        for _ in range(int(p)):
            result = result * v
        return result
    return _monotone(lambda x: x ** p, v, lo_limit=0.0, name='power')


def fsum(values: Iterable[Number]) -> Value:
    """Correctly rounded sum of estimates with accumulated error bounds."""
    values = [as_value(v) for v in values]
    est = math.fsum(v.estimate for v in values)
    err = math.fsum(v.err for v in values) + _rounding(est)
    method = Method.EXACT_FORMULA
    for v in values:
        method = _merge_methods(method, v.method)
    return Value(est, err, method)
