"""Isoperimetric constants on ℝᵈ, ℍₙ and ℍₙ×ℝᵏ"""

from src.isoperimetry.constants import (
    IsoValue,
    bathtub_constant,
    bathtub_constant_closed_form,
    bathtub_exponents,
    iso_bound_for,
    iso_euclidean,
    iso_euclidean_bound,
    iso_lift,
    iso_lower_heisenberg,
    pansu_isoperimetric,
    pansu_original_bound,
    pansu_original_constant,
    rep_constant,
)
from src.isoperimetry.quadrature import bathtub_oracle, composite_gauss_legendre, sine_power_integral

__all__ = [
    'IsoValue', 'bathtub_constant', 'bathtub_constant_closed_form', 'bathtub_exponents',
    'iso_bound_for', 'iso_euclidean', 'iso_euclidean_bound', 'iso_lift', 'iso_lower_heisenberg',
    'pansu_isoperimetric', 'pansu_original_bound', 'pansu_original_constant', 'rep_constant',
    'bathtub_oracle', 'composite_gauss_legendre', 'sine_power_integral',
]
