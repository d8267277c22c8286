"""Weyl-law constants: the series cₙ, W(ℍₙ), W(ℍₙ×ℝᵏ) and product groups"""

from src.weyl.cn import (
    CnMethod,
    CnResult,
    cn,
    cn_closed_form,
    cn_hurwitz,
    cn_quotient,
    cn_quotient_closed_form,
    cn_series,
    series_quotient_asymptotic_floor,
    series_quotient_floor,
    theta,
)
from src.weyl.constants import (
    weyl_euclidean,
    weyl_for,
    weyl_heisenberg,
    weyl_heisenberg_h3_closed_form,
    weyl_hn_rk,
    weyl_product,
)

__all__ = [
    'CnMethod', 'CnResult', 'cn', 'cn_closed_form', 'cn_hurwitz', 'cn_quotient',
    'cn_quotient_closed_form', 'cn_series', 'series_quotient_asymptotic_floor',
    'series_quotient_floor', 'theta',
    'weyl_euclidean', 'weyl_for', 'weyl_heisenberg', 'weyl_heisenberg_h3_closed_form',
    'weyl_hn_rk', 'weyl_product',
]
