"""Faber–Krahn lower bounds and best-of selection"""

from src.faberkrahn.routes import (
    FKRoute,
    FKRouteName,
    fk_best,
    fk_best_route,
    fk_candidates,
    fk_euclidean,
    fk_from_iso,
    fk_from_sobolev,
    fk_iso_equality,
    fk_pansu_route,
)

__all__ = [
    'FKRoute', 'FKRouteName', 'fk_best', 'fk_best_route', 'fk_candidates', 'fk_euclidean',
    'fk_from_iso', 'fk_from_sobolev', 'fk_iso_equality', 'fk_pansu_route',
]
