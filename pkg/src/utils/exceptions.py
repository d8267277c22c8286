"""
Custom exception hierarchy for the Spectral Constants Toolkit.
Provides specific exception types for different error scenarios.
"""


class SpectralConstantsError(Exception):
    """Base exception for all toolkit errors."""

    def __init__(self, message: str, error_code: str = None, details: dict = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or 'SYSTEM_ERROR'
        self.details = details or {}

    def to_dict(self):
        """Convert exception to dictionary for JSON output."""
        return {
            'error': self.error_code,
            'message': self.message,
            'details': self.details
        }


# ==================== ARGUMENT ERRORS ====================

class DomainError(SpectralConstantsError):
    """Argument outside the mathematical domain of the function."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, 'DOMAIN_ERROR', details)


class RangeError(SpectralConstantsError):
    """Argument outside the supported numeric range."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, 'RANGE_ERROR', details)


class UnsupportedError(SpectralConstantsError):
    """No implementation for the requested parameters (e.g. closed form for n > 10)."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, 'UNSUPPORTED', details)


# ==================== NUMERICAL ERRORS ====================

class NumericalError(SpectralConstantsError):
    """Numerical procedure failures."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, 'NUMERICAL_ERROR', details)


class ConvergenceError(NumericalError):
    """Root finder or quadrature refinement did not converge."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, details)
        self.error_code = 'CONVERGENCE_ERROR'


class BudgetError(NumericalError):
    """Required number of series terms exceeds the term budget."""

    def __init__(self, required_terms: int, budget: int):
        message = f"Series needs {required_terms} terms, budget is {budget}"
        super().__init__(message)
        self.error_code = 'BUDGET_ERROR'
        self.details = {'required_terms': required_terms, 'budget': budget}


class CoefficientOverflowError(NumericalError):
    """Exact rational coefficients exceed the integer width budget."""

    def __init__(self, n: int, bits: int = None):
        message = f"Exact coefficients for n={n} exceed the integer width budget"
        super().__init__(message)
        self.error_code = 'COEFFICIENT_OVERFLOW'
        self.details = {'n': n, 'bits': bits}


class SingularityError(NumericalError):
    """A closed-form bound has a non-positive denominator."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, details)
        self.error_code = 'SINGULARITY'


# ==================== BOUND COMBINATION ERRORS ====================

class BoundError(SpectralConstantsError):
    """Errors when combining directed bounds."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, 'BOUND_ERROR', details)


class DirectionError(BoundError):
    """Bound direction incompatible with the requested combination."""

    def __init__(self, expected: str, actual: str):
        message = f"Expected a {expected} bound, got {actual}"
        super().__init__(message)
        self.error_code = 'DIRECTION_ERROR'
        self.details = {'expected': expected, 'actual': actual}


class QuantityMismatchError(BoundError):
    """Bound is for a different quantity than required."""

    def __init__(self, expected: str, actual: str):
        message = f"Expected a bound on {expected}, got {actual}"
        super().__init__(message)
        self.error_code = 'QUANTITY_MISMATCH'
        self.details = {'expected': expected, 'actual': actual}


class DimensionMismatchError(BoundError):
    """Bound belongs to a different group or homogeneous dimension."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, details)
        self.error_code = 'DIMENSION_MISMATCH'


class RouteUnavailableError(BoundError):
    """No explicit constant is available along this route."""

    def __init__(self, route: str, reason: str):
        message = f"Route {route} unavailable: {reason}"
        super().__init__(message)
        self.error_code = 'ROUTE_UNAVAILABLE'
        self.details = {'route': route, 'reason': reason}


# ==================== DATA ERRORS ====================

class ValidationError(SpectralConstantsError):
    """Core-type invariant violated or malformed serialized data."""

    def __init__(self, message: str, field: str = None, details: dict = None):
        super().__init__(message, 'VALIDATION_ERROR', details)
        if field:
            self.details['field'] = field
