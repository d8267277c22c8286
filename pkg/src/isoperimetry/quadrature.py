"""
Quadrature cross-check for the bathtub constant Cₙ′.

The bathtub argument reduces Cₙ′ to a product of one-dimensional integrals
over the sphere coordinates; evaluating them numerically gives a coding of
Cₙ′ that does not go through the Gamma-function closed form.
"""

import math
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from src.core.value import EPS, Method, Value
from src.utils.exceptions import ConvergenceError, RangeError
from src.utils.logger import get_logger
from src.utils.validators import validate_int_range

logger = get_logger('isoperimetry.quadrature')

GAUSS_POINTS = 16
MIN_GRID = 2 ** 8
MAX_GRID = 2 ** 16
DEFAULT_GRID = 2 ** 12

Integrand = Callable[[np.ndarray], np.ndarray]


@lru_cache(maxsize=1)
def _gauss_legendre_rule() -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(GAUSS_POINTS)


def composite_gauss_legendre(f: Integrand, a: float, b: float, panels: int) -> float:
    """Integrate f over [a, b] with `panels` equal 16-point Gauss–Legendre panels."""
    nodes, weights = _gauss_legendre_rule()
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = mid[:, None] + half[:, None] * nodes[None, :]
    contributions = f(x) * weights[None, :] * half[:, None]
    return math.fsum(contributions.ravel())


def _refine(f: Integrand, a: float, b: float, grid: int) -> Tuple[float, float, float]:
    return tuple(composite_gauss_legendre(f, a, b, grid * factor) for factor in (1, 2, 4))


def _value_from_refinements(levels: Tuple[float, float, float], what: str) -> Value:
    coarse, fine, finest = levels
    err = max(abs(fine - coarse), 64.0 * EPS * abs(fine))
    if abs(finest - fine) > 10.0 * err:
        raise ConvergenceError(
            f"{what}: refinement did not settle",
            {'coarse': coarse, 'fine': fine, 'finest': finest},
        )
    return Value(fine, err, Method.QUADRATURE)


def sine_power_integral(p: float, grid: int = DEFAULT_GRID) -> Value:
    """∫₀^π sin^p φ dφ for p ≥ 0 (closed form √π Γ((p+1)/2)/Γ(p/2+1))."""
    grid = validate_int_range(grid, MIN_GRID, MAX_GRID, 'grid')
    levels = _refine(lambda x: np.sin(x) ** p, 0.0, math.pi, grid)
    return _value_from_refinements(levels, f"sine power {p}")


def _bathtub_levels(n: int, grid: int) -> Tuple[float, float, float]:
    Q = 2 * n + 2
    p_phi = Q / (Q - 1.0)
    p_theta = n - 1 + Q / (2.0 * (Q - 1.0))

    phi = _refine(lambda x: np.sin(x) ** p_phi, 0.0, math.pi, grid)
    theta = _refine(lambda x: np.sin(x) ** p_theta, 0.0, math.pi, grid)
    if n == 1:
        sigma = (1.0, 1.0, 1.0)
    else:
        # ω = cos θ₁ with dμ = sin θ₁ cos θ₁ dθ₁
        sigma = _refine(lambda x: np.sin(x) * np.cos(x) ** (1.0 + p_phi), 0.0, 0.5 * math.pi, grid)

    angular = (2.0 * math.pi) ** (n - 1)
    return tuple(
        Q ** (1.0 / Q) * (a * b * c * angular) ** ((Q - 1.0) / Q)
        for a, b, c in zip(phi, theta, sigma)
    )


def bathtub_oracle(n: int, grid: int = DEFAULT_GRID) -> Value:
    """
    Cₙ′ from the reduced bathtub integrals, for n ∈ {1, 2}.

    Args:
        n: Heisenberg index, 1 or 2
        grid: Number of panels per integral at the coarse level (≥ 256)

    Returns:
        Value at 2·grid panels; err is the change from grid panels

    Raises:
        RangeError: If n is not 1 or 2
        ConvergenceError: If the 4·grid level moves by more than 10·err
    """
    n = validate_int_range(n, 1, None, 'n')
    if n > 2:
        raise RangeError(f"bathtub_oracle covers n = 1, 2; got {n}", {'n': n})
    grid = validate_int_range(grid, MIN_GRID, MAX_GRID, 'grid')

    value = _value_from_refinements(_bathtub_levels(n, grid), f"bathtub n={n}")
    logger.debug(f"bathtub_oracle n={n} grid={grid}: {value.estimate:.12g} ± {value.err:.2g}")
    return value
