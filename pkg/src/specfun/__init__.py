"""Special-function kernel: log-gamma, Bessel J and its first zero, Hurwitz zeta, unit measures"""

from src.specfun.bessel import (
    BesselZeroBracket,
    bessel_first_zero,
    bessel_j,
    bessel_j_derivative,
    bessel_zero_bracket,
)
from src.specfun.gamma import gamma, gamma_ratio, ln_gamma, ln_gamma_ratio
from src.specfun.measures import ball_volume, sphere_area
from src.specfun.zeta import hurwitz_zeta

__all__ = [
    'BesselZeroBracket', 'bessel_first_zero', 'bessel_j', 'bessel_j_derivative', 'bessel_zero_bracket',
    'gamma', 'gamma_ratio', 'ln_gamma', 'ln_gamma_ratio',
    'ball_volume', 'sphere_area',
    'hurwitz_zeta',
]
