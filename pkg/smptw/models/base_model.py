# smptw/models/base_model.py
# Abstract base class for lifetime models
# - Defines the interface every fitted model implements (log_pdf, initial_points)
# - Provides the shared log-likelihood, numeric score and the unconstrained
#   reparameterization used by the MLE engine
# - Prevents direct instantiation

import math
from abc import ABC, abstractmethod
from typing import List, Sequence

import numpy as np

from smptw.core.errors import DomainError
from smptw.schema import ModelId, ModelSpec


def as_lifetime_data(data: Sequence[float], min_size: int = 1) -> np.ndarray:
    """
    Validate observations: 1-D, finite, strictly positive.

    Raises:
        DomainError: empty / too short data or an invalid observation
    """
    y = np.asarray(data, dtype=float).ravel()
    if y.size < min_size:
        raise DomainError(f"need at least {min_size} observations, got {y.size}")
    bad = np.flatnonzero(~np.isfinite(y) | (y <= 0))
    if bad.size:
        i = int(bad[0])
        raise DomainError(f"observation #{i + 1} must be positive and finite, got {y[i]}")
    return y


class BaseLifetimeModel(ABC):
    """
    Abstract base class for lifetime models.

    Subclasses set `spec` and implement `log_pdf` and `initial_points`;
    models with a short analytic gradient also override `score`.
    """

    spec: ModelSpec

    def __init__(self):
        """
        Prevent direct instantiation of abstract base class.
        """
        if self.__class__ == BaseLifetimeModel:
            raise NotImplementedError(
                "BaseLifetimeModel is abstract. Use models.get_model() to get a model instance."
            )

    # --------------------------------------------------------
    # Metadata
    # --------------------------------------------------------
    @property
    def model_id(self) -> ModelId:
        return self.spec.model_id

    @property
    def param_names(self) -> List[str]:
        return list(self.spec.param_names)

    @property
    def param_count(self) -> int:
        return self.spec.param_count

    def check_params(self, params: Sequence[float]) -> np.ndarray:
        """
        Raises:
            DomainError: wrong length or a parameter outside its domain
        """
        arr = np.asarray(params, dtype=float).ravel()
        if arr.size != self.param_count:
            raise DomainError(
                f"{self.model_id} expects {self.param_count} parameters, got {arr.size}"
            )
        if not self.spec.contains(arr):
            raise DomainError(
                f"{self.model_id} parameters {arr.tolist()} outside "
                f"domains {list(self.spec.param_domains)}"
            )
        return arr

    # --------------------------------------------------------
    # Density and likelihood
    # --------------------------------------------------------
    @abstractmethod
    def log_pdf(self, params: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        Log density at y (already validated, strictly positive) for in-domain params.

        Args:
            params: Parameter vector in spec.param_names order
            y: Observations

        Returns:
            np.ndarray: log f(y), same shape as y
        """
        pass

    @abstractmethod
    def initial_points(self, y: np.ndarray) -> List[np.ndarray]:
        """
        Start points for the optimizer, derived from the (sorted) data.

        Returns:
            List[np.ndarray]: In-domain parameter vectors, best guess first
        """
        pass

    def pdf(self, params: Sequence[float], y) -> np.ndarray:
        """
        Density at y for validated params.

        Raises:
            DomainError: out-of-domain params or y <= 0
        """
        arr = self.check_params(params)
        yy = np.asarray(y, dtype=float)
        if np.any(~np.isfinite(yy)) or np.any(yy <= 0):
            raise DomainError("density evaluation points must be positive and finite")
        with np.errstate(all="ignore"):
            return np.exp(self.log_pdf(arr, yy))

    def log_likelihood(self, params: Sequence[float], y: np.ndarray) -> float:
        """
        Sum of log densities; -inf for out-of-domain params or an underflowing
        density, so optimizers can step back.
        """
        arr = np.asarray(params, dtype=float)
        if not self.spec.contains(arr):
            return -math.inf
        with np.errstate(all="ignore"):
            value = float(np.sum(self.log_pdf(arr, y)))
        return value if math.isfinite(value) else -math.inf

    def score(self, params: Sequence[float], y: np.ndarray) -> np.ndarray:
        """
        Gradient of the log-likelihood by central differences.
        Models with an analytic gradient override this.
        """
        arr = np.asarray(params, dtype=float)
        grad = np.empty_like(arr)
        for i in range(arr.size):
            h = self.fd_step(arr, i, 1e-6)
            up, down = arr.copy(), arr.copy()
            up[i] += h
            down[i] -= h
            grad[i] = (self.log_likelihood(up, y) - self.log_likelihood(down, y)) / (2 * h)
        return grad

    def fd_step(self, params: np.ndarray, i: int, rel: float) -> float:
        """Central-difference step for coordinate i, kept inside the domain."""
        value = float(params[i])
        lo, hi = self.spec.param_domains[i]
        h = max(rel, rel * abs(value))
        if math.isfinite(lo):
            h = min(h, 0.5 * (value - lo)) if value > lo else h
        if math.isfinite(hi):
            h = min(h, 0.5 * (hi - value)) if value < hi else h
        return h

    # --------------------------------------------------------
    # Unconstrained reparameterization
    # --------------------------------------------------------
    # (0, inf)  -> theta = log(p)
    # (lo, hi)  -> p = mid + half * tanh(theta)
    def to_theta(self, params: Sequence[float]) -> np.ndarray:
        arr = np.asarray(params, dtype=float)
        theta = np.empty_like(arr)
        for i, (lo, hi) in enumerate(self.spec.param_domains):
            if lo == 0 and hi == math.inf:
                theta[i] = math.log(arr[i])
            else:
                mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
                x = min(max((arr[i] - mid) / half, -1 + 1e-12), 1 - 1e-12)
                theta[i] = math.atanh(x)
        return theta

    def from_theta(self, theta: np.ndarray) -> np.ndarray:
        params = np.empty_like(np.asarray(theta, dtype=float))
        for i, (lo, hi) in enumerate(self.spec.param_domains):
            if lo == 0 and hi == math.inf:
                params[i] = math.exp(theta[i]) if theta[i] < 700 else math.inf
            else:
                params[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * math.tanh(theta[i])
        return params

    def theta_jacobian(self, theta: np.ndarray) -> np.ndarray:
        """Diagonal of d params / d theta."""
        jac = np.empty_like(np.asarray(theta, dtype=float))
        for i, (lo, hi) in enumerate(self.spec.param_domains):
            if lo == 0 and hi == math.inf:
                jac[i] = math.exp(theta[i]) if theta[i] < 700 else math.inf
            else:
                jac[i] = 0.5 * (hi - lo) * (1.0 - math.tanh(theta[i]) ** 2)
        return jac
