"""Measures of unit spheres and balls"""

import math

from src.core.value import Value, exp
from src.specfun.gamma import ln_gamma
from src.utils.validators import validate_int_range

MAX_DIMENSION = 300

_LOG_PI = math.log(math.pi)


def sphere_area(d: int) -> Value:
    """|S^{d−1}| = 2π^{d/2} / Γ(d/2)."""
    d = validate_int_range(d, 1, MAX_DIMENSION, 'd')
    return exp(math.log(2.0) + 0.5 * d * _LOG_PI - ln_gamma(d / 2.0))


def ball_volume(d: int) -> Value:
    """ω_d = π^{d/2} / Γ(d/2 + 1)."""
    d = validate_int_range(d, 1, MAX_DIMENSION, 'd')
    return exp(0.5 * d * _LOG_PI - ln_gamma(d / 2.0 + 1.0))
