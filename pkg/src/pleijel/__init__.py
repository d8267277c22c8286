"""Pleijel bounds on ℍₙ×ℝᵏ: routes, γ̃ₙ, Pansu-conditional quotients and dimension scans"""

from src.pleijel.bounds import (
    COURANT_BASELINE,
    PleijelBound,
    PleijelRoute,
    best_gamma_bound,
    example_criterion,
    gamma_candidates,
    lift_gn_constant,
    lifting_k1_factor,
    maincomp_specialized,
    pleijel_iso_bound,
    pleijel_lifting_bound,
    pleijel_lifting_k1_form,
    pleijel_pansu,
    pleijel_product_bound,
    pleijel_product_factor_limit,
    pleijel_product_partial_factor,
)
from src.pleijel.gamma import (
    gamma_euclidean,
    gamma_euclidean_ratio,
    gamma_from,
    gamma_tilde,
    gamma_tilde_bound,
    gamma_tilde_quotient,
)
from src.pleijel.quotients import (
    ALPHA_QUOTIENT_CEILING,
    QuotientSuiteRow,
    alpha,
    alpha_direct,
    alpha_quotient,
    alpha_quotient_epsilon_polynomial,
    bessel_zero_ratio_bound,
    combined_quotient_upper,
    gamma_rd_quotient,
    gamma_rd_quotient_upper,
    gamma_tilde_quotient_denominator,
    gamma_tilde_quotient_upper,
    pansu_base_product,
    pansu_base_product_closed_form,
    pansu_quotient_suite,
    pansu_threshold_constant,
    pansu_step_quotient,
)
from src.pleijel.scans import (
    OPEN_CASES,
    aubin_talenti_a_bound,
    fitted_stirling_constant,
    large_dimension_factors,
    large_dimension_scan,
    scan_groups,
    scan_record,
    stirling_fit_record,
    stirling_record,
    stirling_remainder,
)

__all__ = [
    'COURANT_BASELINE', 'PleijelBound', 'PleijelRoute', 'best_gamma_bound', 'example_criterion',
    'gamma_candidates', 'lift_gn_constant', 'lifting_k1_factor', 'maincomp_specialized',
    'pleijel_iso_bound', 'pleijel_lifting_bound', 'pleijel_lifting_k1_form', 'pleijel_pansu',
    'pleijel_product_bound', 'pleijel_product_factor_limit', 'pleijel_product_partial_factor',
    'gamma_euclidean', 'gamma_euclidean_ratio', 'gamma_from', 'gamma_tilde', 'gamma_tilde_bound',
    'gamma_tilde_quotient',
    'ALPHA_QUOTIENT_CEILING', 'QuotientSuiteRow', 'alpha', 'alpha_direct', 'alpha_quotient',
    'alpha_quotient_epsilon_polynomial', 'bessel_zero_ratio_bound', 'combined_quotient_upper',
    'gamma_rd_quotient', 'gamma_rd_quotient_upper', 'gamma_tilde_quotient_denominator',
    'gamma_tilde_quotient_upper', 'pansu_base_product', 'pansu_base_product_closed_form',
    'pansu_quotient_suite', 'pansu_step_quotient', 'pansu_threshold_constant',
    'OPEN_CASES', 'aubin_talenti_a_bound', 'fitted_stirling_constant', 'large_dimension_factors',
    'large_dimension_scan', 'scan_groups', 'scan_record', 'stirling_fit_record', 'stirling_record',
    'stirling_remainder',
]
