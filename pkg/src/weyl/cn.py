"""
The series cₙ = Σ_{m≥0} C(m+n−1, m) (2m+n)^{−(n+1)} by three independent methods.

* direct summation with an analytic tail bound,
* exact reduction to Hurwitz zeta values,
* the closed forms cₙ = π²Pₙ(π²)/Dₙ for n ≤ 10 (and chained quotients for 11..13).
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from src.core.value import EPS, Method, Value, exact, fsum
from src.specfun.zeta import hurwitz_zeta
from src.utils.exceptions import BudgetError, CoefficientOverflowError, UnsupportedError, ValidationError
from src.utils.logger import get_logger
from src.utils.validators import validate_int_range, validate_range

logger = get_logger('weyl.cn')

MAX_SERIES_N = 13
MAX_HURWITZ_N = 40
COEFFICIENT_BITS = 256
TERM_BUDGET = 10 ** 8
BLOCK_SIZE = 2 ** 16

# π² to 32 significant digits; the printed polynomials cancel too strongly for binary64
PI_SQUARED = Fraction('9.8696044010893586188344909998761')


class CnMethod(str, Enum):
    DIRECT_SERIES = 'direct_series'
    HURWITZ_REDUCTION = 'hurwitz_reduction'
    CLOSED_FORM_TABLE = 'closed_form_table'


@dataclass(frozen=True)
class CnResult:
    n: int
    value: Value
    method: CnMethod

    def __post_init__(self):
        if self.value.estimate <= 0:
            raise ValidationError(f"c_{self.n} must be positive", field='value')


# ==================== DIRECT SERIES ====================

def series_tail_bound(n: int, terms: int) -> float:
    """
    Bound on Σ_{m≥M} of the cₙ summand for M ≥ n.

    For m ≥ n, C(m+n−1, n−1) ≤ (2m)^{n−1}/(n−1)! and (2m+n)^{−(n+1)} ≤ (2m)^{−(n+1)},
    so each term is at most 1/(4(n−1)! m²), whose tail is at most 1/(4(n−1)!(M−1)).
    """
    return 1.0 / (4.0 * math.factorial(n - 1) * (terms - 1))


def required_terms(n: int, tol: float) -> int:
    return max(n, 2, math.ceil(1.0 + 1.0 / (4.0 * math.factorial(n - 1) * tol)))


def _block_sum(n: int, start: int, stop: int) -> float:
    m = np.arange(start, stop, dtype=np.float64)
    u = 2.0 * m + n
    terms = np.ones_like(m)
    for i in range(1, n):
        terms *= (m + i) / u
    terms /= u * u * math.factorial(n - 1)
    # smallest terms (largest m) first
    return math.fsum(terms[::-1])


def cn_series(n: int, tol: float) -> Value:
    """
    cₙ by direct summation of M terms, with err = tail bound + rounding bound.

    Args:
        n: Index, 1 ≤ n ≤ 13
        tol: Target tail bound, 1e-8 ≤ tol ≤ 1e-3

    Raises:
        RangeError: If n or tol is out of range
        BudgetError: If more than 1e8 terms would be needed
    """
    n = validate_int_range(n, 1, MAX_SERIES_N, 'n')
    tol = validate_range(tol, 1e-8, 1e-3, 'tol')

    terms = required_terms(n, tol)
    if terms > TERM_BUDGET:
        raise BudgetError(terms, TERM_BUDGET)

    blocks = [_block_sum(n, start, min(start + BLOCK_SIZE, terms)) for start in range(0, terms, BLOCK_SIZE)]
    total = math.fsum(reversed(blocks))
    tail = series_tail_bound(n, terms)
    rounding = (n + 4) * EPS * total

    logger.debug(f"c_{n} series: {terms} terms, tail bound {tail:.3e}")
    return Value(total, tail + rounding, Method.SERIES)


# ==================== HURWITZ REDUCTION ====================

@lru_cache(maxsize=64)
def binomial_polynomial(n: int) -> Tuple[Fraction, ...]:
    """
    Coefficients a_0..a_{n−1} with C(m+n−1, n−1) = Σ_j a_j u^j, u = 2m+n.

    C(m+n−1, n−1) = Π_{i=1}^{n−1} (u + 2i − n) / (2^{n−1}(n−1)!).

    Raises:
        CoefficientOverflowError: If n > 40 or a coefficient exceeds the width budget
    """
    if n > MAX_HURWITZ_N:
        raise CoefficientOverflowError(n)

    poly: List[int] = [1]
    for i in range(1, n):
        shift = 2 * i - n
        nxt = [0] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j] += c * shift
            nxt[j + 1] += c
        poly = nxt

    denominator = 2 ** (n - 1) * math.factorial(n - 1)
    coefficients = tuple(Fraction(c, denominator) for c in poly)
    widest = max(max(abs(c.numerator).bit_length(), c.denominator.bit_length()) for c in coefficients)
    if widest > COEFFICIENT_BITS:
        raise CoefficientOverflowError(n, widest)
    return coefficients


@lru_cache(maxsize=64)
def cn_hurwitz(n: int) -> Value:
    """
    cₙ = Σ_j a_j 2^{−(n+1−j)} ζ(n+1−j, n/2), exact coefficients, 1 ≤ n ≤ 40.

    Raises:
        CoefficientOverflowError: If n > 40
        RangeError: If n < 1
    """
    if isinstance(n, int) and not isinstance(n, bool) and n > MAX_HURWITZ_N:
        raise CoefficientOverflowError(n)
    n = validate_int_range(n, 1, MAX_HURWITZ_N, 'n')

    terms = []
    for j, a in enumerate(binomial_polynomial(n)):
        if a == 0:
            continue
        s = n + 1 - j
        terms.append(hurwitz_zeta(s, n / 2.0) * (float(a) * 2.0 ** (-s)))
    result = fsum(terms)
    # float(a) rounding
    result = result.widen(sum(abs(t.estimate) for t in terms) * EPS)
    return result


# ==================== CLOSED FORMS ====================

# cₙ = π² Pₙ(π²) / Dₙ, coefficients of Pₙ in increasing powers of π²
CLOSED_FORMS = {
    1: ((1,), 8),
    2: ((1,), 48),
    3: ((12, -1), 768),
    4: ((15, -1), 17280),
    5: ((120, -100, 9), 368640),
    6: ((315, -105, 8), 29030400),
    7: ((6720, -19600, 14504, -1275), 2477260800),
    8: ((1575, -1470, 490, -36), 24385536000),
    9: ((40320, -282240, 663264, -439144, 37975), 3329438515200),
    10: ((3465, -6930, 6006, -1804, 128), 15450675609600),
}

# c_{n}/c_{n−1} = scale·R_n(π²) / (den·R_{n−1}(π²)), where R_10 = P_10
_Q11 = (1774080, -24393600, 129773952, -258523760, 160227716, -13712895)
_Q12 = (2837835, -10405395, 18432414, -13774761, 3835832, -265344)
_Q13 = (2075673600, -49470220800, 497175719040, -2161554183360, 3895229400920, -2314322017956, 196697984175)

QUOTIENT_FORMS = {
    11: (3, _Q11, 10240, CLOSED_FORMS[10][0]),
    12: (256, _Q12, 27027, _Q11),
    13: (7, _Q13, 40960, _Q12),
}


def _poly_at_pi_squared(coefficients: Sequence[int]) -> Fraction:
    result = Fraction(0)
    for c in reversed(coefficients):
        result = result * PI_SQUARED + c
    return result


def _closed_form_exact(n: int) -> Fraction:
    coefficients, denominator = CLOSED_FORMS[n]
    return PI_SQUARED * _poly_at_pi_squared(coefficients) / denominator


def _from_fraction(x: Fraction) -> Value:
    estimate = float(x)
    return Value(estimate, 4.0 * math.ulp(estimate), Method.EXACT_FORMULA)


def cn_closed_form(n: int) -> Value:
    """
    Printed closed form of cₙ for 1 ≤ n ≤ 10.

    Raises:
        UnsupportedError: For n > 10
    """
    if isinstance(n, int) and not isinstance(n, bool) and n > 10:
        raise UnsupportedError(f"No closed form printed for c_{n}", {'n': n, 'max_n': 10})
    n = validate_int_range(n, 1, 10, 'n')
    return _from_fraction(_closed_form_exact(n))


def cn_quotient(n: int) -> Value:
    """The printed quotient c_n/c_{n−1} for n ∈ {11, 12, 13}."""
    if n not in QUOTIENT_FORMS:
        raise UnsupportedError(f"No printed quotient for c_{n}/c_{n - 1}", {'n': n})
    scale, numerator, den, previous = QUOTIENT_FORMS[n]
    return _from_fraction(scale * _poly_at_pi_squared(numerator) / (den * _poly_at_pi_squared(previous)))


def cn_quotient_closed_form(n: int) -> Value:
    """
    c₁₁, c₁₂ or c₁₃ by chaining the printed quotients from the c₁₀ closed form.

    Raises:
        UnsupportedError: For n outside {11, 12, 13}
    """
    if n not in QUOTIENT_FORMS:
        raise UnsupportedError(f"Quotient chain covers n = 11..13, got {n}", {'n': n})
    exact_value = _closed_form_exact(10)
    for step in range(11, n + 1):
        scale, numerator, den, previous = QUOTIENT_FORMS[step]
        exact_value *= scale * _poly_at_pi_squared(numerator) / (den * _poly_at_pi_squared(previous))
    return _from_fraction(exact_value)


def cn(n: int, method: CnMethod = CnMethod.HURWITZ_REDUCTION, tol: float = 1e-7) -> CnResult:
    """cₙ by the requested method."""
    method = CnMethod(method)
    if method == CnMethod.DIRECT_SERIES:
        value = cn_series(n, tol)
    elif method == CnMethod.CLOSED_FORM_TABLE:
        value = cn_quotient_closed_form(n) if n in QUOTIENT_FORMS else cn_closed_form(n)
    else:
        value = cn_hurwitz(n)
    return CnResult(n, value, method)


# ==================== QUOTIENT FLOORS ====================

def theta(n: int, m):
    """θₙ(m) = ((m+n−1)/(2m+n))·(1 − 1/(2m+n))ⁿ; accepts scalars or numpy arrays."""
    u = 2.0 * np.asarray(m, dtype=np.float64) + n
    result = (np.asarray(m, dtype=np.float64) + n - 1.0) / u * (1.0 - 1.0 / u) ** n
    return float(result) if np.ndim(result) == 0 else result


def series_quotient_floor(n: int, m_max: int = 10 ** 5) -> Value:
    """(n−1)⁻¹·min_{0≤m≤m_max} θₙ(m), a lower bound on cₙ/cₙ₋₁."""
    n = validate_int_range(n, 2, MAX_HURWITZ_N, 'n')
    m_max = validate_int_range(m_max, 0, TERM_BUDGET, 'm_max')
    floor = float(np.min(theta(n, np.arange(m_max + 1)))) / (n - 1)
    return Value(floor, (n + 4) * EPS * floor, Method.EXACT_FORMULA)


def series_quotient_asymptotic_floor(n: int) -> Value:
    """(n−1)⁻¹(e⁻¹e^{−1/(2(n−1))} − 1/n)."""
    n = validate_int_range(n, 2, MAX_HURWITZ_N, 'n')
    return exact((math.exp(-1.0 - 1.0 / (2.0 * (n - 1))) - 1.0 / n) / (n - 1))
