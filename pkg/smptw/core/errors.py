# smptw/core/errors.py
# Exception hierarchy shared by every smptw module
# - DomainError (also a ValueError): bad parameters, data or arguments -> CLI exit 2
# - NumericError (also an ArithmeticError): numerical failure -> CLI exit 3
# - Numerical errors carry the partial result they had when they gave up

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

__all__ = [
    "SmptwError",
    "DomainError",
    "DegenerateInputError",
    "DatasetError",
    "AiccUnavailableError",
    "NumericError",
    "NonConvergenceError",
    "QuadratureError",
    "ConsistencyError",
    "HazardOverflowError",
    "StdErrorUnavailableError",
]


class SmptwError(Exception):
    """Base error for the smptw package."""


# Domain errors
class DomainError(SmptwError, ValueError):
    """Argument, parameter or observation outside its valid domain."""


class DegenerateInputError(DomainError):
    """Raised when a conditioning probability (F(t) or S(t)) is numerically zero."""

    def __init__(self, message: str, probability: float):
        super().__init__(message)
        self.probability = probability


class DatasetError(DomainError):
    """Dataset file could not be read; carries the offending path and row."""

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        row: Optional[int] = None,
    ):
        location = ""
        if path is not None:
            location = f"{path}"
            if row is not None:
                location += f":{row}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.path = Path(path) if path is not None else None
        self.row = row


class AiccUnavailableError(DomainError):
    """AICc needs n > k + 1."""

    def __init__(self, n: int, k: int):
        super().__init__(f"AICc undefined for n={n}, k={k} (needs n > k + 1)")
        self.n = n
        self.k = k


# Numeric errors
class NumericError(SmptwError, ArithmeticError):
    """Base error for numerical failures."""


class NonConvergenceError(NumericError):
    """Series or iteration stopped at its cap; carries the partial result."""

    def __init__(self, message: str, partial_sum: float = float("nan"), terms: int = 0):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.terms = terms


class QuadratureError(NumericError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message: str, estimate: float, abs_error: float):
        super().__init__(message)
        self.estimate = estimate
        self.abs_error = abs_error


class ConsistencyError(NumericError):
    """Two independent evaluation paths disagree beyond tolerance."""

    def __init__(self, message: str, series_value: float, quadrature_value: float):
        super().__init__(message)
        self.series_value = series_value
        self.quadrature_value = quadrature_value


class HazardOverflowError(NumericError):
    """Hazard rate is not representable (survival underflow)."""


class StdErrorUnavailableError(NumericError):
    """Standard errors missing: fit not converged or observed information singular."""
