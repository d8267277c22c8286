"""Sharp Sobolev constants on ℍₙ and ℝᵏ"""

import math

from src.core.bound import Bound, Quantity, exact_bound
from src.core.group import GroupSpec
from src.core.value import Value, exact, exp
from src.specfun.gamma import ln_gamma
from src.utils.exceptions import DomainError
from src.utils.validators import validate_int_range

MAX_HEISENBERG_N = 100
MAX_EUCLIDEAN_K = 300

_LOG_TWO = math.log(2.0)
_LOG_PI = math.log(math.pi)


def sobolev_heisenberg(n: int) -> Value:
    """Jerison–Lee constant C^Sob(ℍₙ) = 4πn² / (2^{2n} n!)^{1/(n+1)}."""
    n = validate_int_range(n, 1, MAX_HEISENBERG_N, 'n')
    log_value = math.log(4.0 * math.pi * n * n) - (2 * n * _LOG_TWO + ln_gamma(n + 1.0)) / (n + 1)
    return exp(log_value)


def sobolev_euclidean(k: int) -> Value:
    """
    Aubin–Talenti constant C^Sob(ℝᵏ) = k(k−2)/4 · 2^{2/k} π^{1+1/k} Γ((k+1)/2)^{−2/k}.

    Raises:
        DomainError: If k < 3
    """
    k = validate_int_range(k, 1, MAX_EUCLIDEAN_K, 'k')
    if k < 3:
        raise DomainError(f"The critical Sobolev inequality needs k ≥ 3, got {k}", {'k': k})
    log_value = (exact(math.log(k * (k - 2) / 4.0) + (2.0 / k) * _LOG_TWO + (1.0 + 1.0 / k) * _LOG_PI)
                 - ln_gamma((k + 1) / 2.0) * (2.0 / k))
    return exp(log_value)


def sobolev_heisenberg_bound(n: int) -> Bound:
    return exact_bound(Quantity.SOBOLEV_CONST, sobolev_heisenberg(n), 'sobolev_heisenberg', GroupSpec(n, 0))


def sobolev_euclidean_bound(k: int) -> Bound:
    return exact_bound(Quantity.SOBOLEV_CONST, sobolev_euclidean(k), 'sobolev_euclidean', GroupSpec(0, k))
