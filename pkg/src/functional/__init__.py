"""Sobolev and Gagliardo–Nirenberg constants and the lifting bounds built from them"""

from src.functional.gagliardo_nirenberg import (
    GNParams,
    critical_exponent,
    gn_from_sobolev,
    gn_nagy,
    gn_nagy_Q,
    gn_scaling,
    gn_sobolev_exponent,
    wangzhang_limit,
)
from src.functional.lifting import (
    best_sobolev_lift,
    lifting_exponent,
    product_sobolev,
    product_sobolev_asym,
    sobolev_lift,
    sobolev_lift_k1_form,
    sobolev_lift_symmetric,
)
from src.functional.sobolev import (
    sobolev_euclidean,
    sobolev_euclidean_bound,
    sobolev_heisenberg,
    sobolev_heisenberg_bound,
)

__all__ = [
    'GNParams', 'critical_exponent', 'gn_from_sobolev', 'gn_nagy', 'gn_nagy_Q', 'gn_scaling',
    'gn_sobolev_exponent', 'wangzhang_limit',
    'best_sobolev_lift', 'lifting_exponent', 'product_sobolev', 'product_sobolev_asym',
    'sobolev_lift', 'sobolev_lift_k1_form', 'sobolev_lift_symmetric',
    'sobolev_euclidean', 'sobolev_euclidean_bound', 'sobolev_heisenberg', 'sobolev_heisenberg_bound',
]
