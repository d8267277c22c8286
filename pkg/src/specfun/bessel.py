"""
Bessel functions of the first kind and their first positive zeros.

J_ν(x) is computed by Miller's backward recurrence, normalised with the
identity (x/2)^ν / Γ(ν+1) = Σ_k d_k J_{ν+2k}(x). First zeros are bracketed
by √((ν+1)(ν+5)) < j_{ν,1} < √(ν+1)(√(ν+2)+1), bisected and then polished
with Newton steps.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from src.core.value import Method, Value
from src.specfun.gamma import ln_gamma_float
from src.utils.exceptions import ConvergenceError, ValidationError
from src.utils.logger import get_logger
from src.utils.validators import validate_range

logger = get_logger('specfun.bessel')

MAX_ORDER = 300.0
MAX_ARGUMENT = 400.0
MAX_ZERO_ORDER = 200.0

_RESCALE = 1e100
_SERIES_CUTOFF = 1e-3
_EXTRA_START = 16
_BASE_ERR = 1e-14

BISECTION_WIDTH = 1e-6
NEWTON_TOLERANCE = 1e-10
_MAX_BISECTIONS = 80
_MAX_NEWTON_STEPS = 25


# ==================== BESSEL J ====================

def _start_offset(x: float) -> int:
    return 40 + math.ceil(x) + math.ceil(math.sqrt(8.0 * x))


@lru_cache(maxsize=1024)
def _normalisation_weights(nu: float, kmax: int) -> Tuple[float, ...]:
    """d_k = (ν+2k)Γ(ν+k) / (k! Γ(ν+1)), built in log space."""
    weights = [1.0]
    log_d = 0.0
    for k in range(1, kmax + 1):
        if k == 1:
            ratio = nu + 2.0
        else:
            ratio = (nu + 2 * k) / (nu + 2 * k - 2) * (nu + k - 1) / k
        log_d += math.log(ratio)
        weights.append(math.exp(log_d))
    return tuple(weights)


def _prefactor(nu: float, x: float) -> float:
    return math.exp(nu * math.log(x / 2.0) - ln_gamma_float(nu + 1.0))


def _miller(nu: float, x: float, offset: int) -> Tuple[float, float]:
    """(J_ν(x), J_{ν+1}(x)) by backward recurrence started at order ν + offset."""
    weights = _normalisation_weights(nu, offset // 2)
    f_above, f = 0.0, 1e-30
    total = weights[offset // 2] * f if offset % 2 == 0 else 0.0

    for j in range(offset, 0, -1):
        f_above, f = f, (2.0 * (nu + j) / x) * f - f_above
        if abs(f) > _RESCALE:
            f /= _RESCALE
            f_above /= _RESCALE
            total /= _RESCALE
        if (j - 1) % 2 == 0:
            total += weights[(j - 1) // 2] * f

    scale = _prefactor(nu, x) / total
    return f * scale, f_above * scale


def _ascending(nu: float, x: float) -> float:
    """Power series, used only for tiny x where it converges in a few terms."""
    q = -(x / 2.0) ** 2
    term = total = 1.0
    m = 0
    while abs(term) > 1e-17 * abs(total):
        m += 1
        term *= q / (m * (nu + m))
        total += term
    return total * _prefactor(nu, x)


def _bessel_pair(nu: float, x: float, offset: int = 0) -> Tuple[float, float]:
    if x < _SERIES_CUTOFF:
        return _ascending(nu, x), _ascending(nu + 1.0, x)
    return _miller(nu, x, _start_offset(x) + offset)


@lru_cache(maxsize=65536)
def bessel_j(nu: float, x: float) -> Value:
    """
    J_ν(x) for 0 ≤ ν ≤ 300 and 0 ≤ x ≤ 400 with absolute err ≤ 1e-12.

    The error bound is the disagreement between two recurrence start
    orders plus a rounding floor.

    Raises:
        RangeError: If (ν, x) is outside the supported rectangle
    """
    nu = validate_range(nu, 0.0, MAX_ORDER, 'nu')
    x = validate_range(x, 0.0, MAX_ARGUMENT, 'x')
    if x == 0.0:
        return Value(1.0 if nu == 0.0 else 0.0, 0.0, Method.EXACT_FORMULA)

    first, _ = _bessel_pair(nu, x)
    if x < _SERIES_CUTOFF:
        return Value(first, _BASE_ERR, Method.SERIES)
    second, _ = _bessel_pair(nu, x, _EXTRA_START)
    return Value(first, abs(first - second) + _BASE_ERR, Method.SERIES)


def bessel_j_derivative(nu: float, x: float) -> Value:
    """J'_ν(x) = (ν/x)J_ν(x) − J_{ν+1}(x) for x > 0."""
    nu = validate_range(nu, 0.0, MAX_ORDER - 1.0, 'nu')
    x = validate_range(x, 0.0, MAX_ARGUMENT, 'x', min_inclusive=False)
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x)


# ==================== FIRST ZERO ====================

@dataclass(frozen=True)
class BesselZeroBracket:
    """Interval known to contain j_{ν,1}."""

    order: float
    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValidationError("bracket lower end must be below upper end", field='lower')

    def contains(self, x: float) -> bool:
        return self.lower < x < self.upper


def bessel_zero_bracket(nu: float) -> BesselZeroBracket:
    """Lo lower bound and Chambers upper bound for j_{ν,1}."""
    nu = validate_range(nu, 0.0, MAX_ZERO_ORDER, 'nu')
    lower = math.sqrt((nu + 1.0) * (nu + 5.0))
    upper = math.sqrt(nu + 1.0) * (math.sqrt(nu + 2.0) + 1.0)
    return BesselZeroBracket(nu, lower, upper)


@lru_cache(maxsize=4096)
def bessel_first_zero(nu: float) -> Value:
    """
    First positive zero j_{ν,1} for 0 ≤ ν ≤ 200 with err ≤ 1e-9.

    Args:
        nu: Order ν

    Returns:
        Root-find Value lying strictly inside bessel_zero_bracket(ν)

    Raises:
        RangeError: If ν is outside [0, 200]
        ConvergenceError: If bisection or Newton polishing stalls
    """
    bracket = bessel_zero_bracket(nu)
    nu = bracket.order
    lo, hi = bracket.lower, bracket.upper

    # J_ν is positive on (0, j_{ν,1})
    if _bessel_pair(nu, lo)[0] <= 0.0 or _bessel_pair(nu, hi)[0] >= 0.0:
        raise ConvergenceError(
            f"Bracket does not isolate the first zero of J_{nu}",
            {'nu': nu, 'lower': lo, 'upper': hi},
        )

    bisections = 0
    while hi - lo > BISECTION_WIDTH:
        if bisections >= _MAX_BISECTIONS:
            raise ConvergenceError(f"Bisection stalled for order {nu}", {'nu': nu, 'width': hi - lo})
        mid = 0.5 * (lo + hi)
        if _bessel_pair(nu, mid)[0] > 0.0:
            lo = mid
        else:
            hi = mid
        bisections += 1

    root = 0.5 * (lo + hi)
    step = hi - lo
    for newton_steps in range(1, _MAX_NEWTON_STEPS + 1):
        j_nu, j_next = _bessel_pair(nu, root)
        slope = (nu / root) * j_nu - j_next
        step = j_nu / slope
        root -= step
        if not lo - BISECTION_WIDTH < root < hi + BISECTION_WIDTH:
            raise ConvergenceError(f"Newton left the bracket for order {nu}", {'nu': nu, 'root': root})
        if abs(step) < NEWTON_TOLERANCE:
            break
    else:
        raise ConvergenceError(f"Newton did not converge for order {nu}", {'nu': nu, 'last_step': step})

    slope = abs(bessel_j_derivative(nu, root).estimate)
    residual = bessel_j(nu, root)
    err = (abs(residual.estimate) + residual.err) / slope + abs(step) + 4.0 * math.ulp(root)

    logger.debug(f"j_({nu},1) = {root:.12f} after {bisections} bisections, {newton_steps} Newton steps")
    return Value(root, err, Method.ROOT_FIND)
