# smptw/models/weibull.py
# Weibull-family competitor models
# - standard_weibull:      f = phi y^(phi-1) e^(-y^phi)
# - two_param_weibull:     scale beta, shape phi
# - exponentiated_weibull: exponent beta, rate lambda, shape phi
# - transmuted_weibull:    transmutation beta in [-1, 1], rate lambda, shape phi
# All four have analytic scores.

import math
from typing import List, Tuple

import numpy as np

from smptw.core.errors import DomainError
from smptw.models.base_model import BaseLifetimeModel
from smptw.schema import ModelId, ModelSpec
from smptw.utils.numerics import find_root

_POS = (0.0, math.inf)
_EULER_GAMMA = 0.5772156649015329


# --------------------------------------------------------
# Start-point helpers
# --------------------------------------------------------
def standard_weibull_shape(y: np.ndarray) -> float:
    """
    Shape MLE of the standard (scale 1) Weibull: root of
    n/phi + sum log y - sum y^phi log y, which is decreasing in phi.
    """
    log_y = np.log(y)
    n = y.size

    def score(phi: float) -> float:
        with np.errstate(over="ignore"):
            return n / phi + float(np.sum(log_y)) - float(np.sum(np.power(y, phi) * log_y))

    lo, hi = 0.5, 2.0
    while score(lo) <= 0 and lo > 1e-6:
        lo /= 2
    while score(hi) >= 0 and hi < 200:
        hi *= 2
    try:
        return find_root(score, (lo, hi))
    except DomainError:
        return 1.0


def menon_start(y: np.ndarray) -> Tuple[float, float]:
    """Moment-of-log-data estimates (scale, shape) of the two-parameter Weibull."""
    log_y = np.log(y)
    sd = float(np.std(log_y, ddof=1)) if y.size > 1 else 0.0
    shape = math.pi / (sd * math.sqrt(6.0)) if sd > 0 else 1.0
    scale = math.exp(float(np.mean(log_y)) + _EULER_GAMMA / shape)
    return scale, shape


# --------------------------------------------------------
# Models
# --------------------------------------------------------
class StandardWeibullModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.STANDARD_WEIBULL,
        param_count=1,
        param_names=("phi",),
        param_domains=(_POS,),
        label="Standard Weibull",
    )

    def log_pdf(self, params, y):
        (phi,) = params
        return math.log(phi) + (phi - 1.0) * np.log(y) - np.power(y, phi)

    def score(self, params, y):
        (phi,) = params
        log_y = np.log(y)
        return np.array([y.size / phi + np.sum(log_y) - np.sum(np.power(y, phi) * log_y)])

    def initial_points(self, y):
        return [np.array([standard_weibull_shape(y)])]


class TwoParamWeibullModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.TWO_PARAM_WEIBULL,
        param_count=2,
        param_names=("beta", "phi"),
        param_domains=(_POS, _POS),
        label="Two parameter Weibull",
    )

    def log_pdf(self, params, y):
        beta, phi = params
        log_v = np.log(y) - math.log(beta)
        return math.log(phi) - math.log(beta) + (phi - 1.0) * log_v - np.exp(phi * log_v)

    def score(self, params, y):
        beta, phi = params
        log_v = np.log(y) - math.log(beta)
        u = np.exp(phi * log_v)
        d_beta = (phi / beta) * np.sum(u - 1.0)
        d_phi = y.size / phi + np.sum(log_v) - np.sum(u * log_v)
        return np.array([d_beta, d_phi])

    def initial_points(self, y):
        scale, shape = menon_start(y)
        return [np.array([scale, shape]), np.array([float(np.mean(y)), 1.0])]


class ExponentiatedWeibullModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.EXPONENTIATED_WEIBULL,
        param_count=3,
        param_names=("beta", "lambda", "phi"),
        param_domains=(_POS, _POS, _POS),
        label="Exponentiated Weibull",
    )

    def log_pdf(self, params, y):
        beta, lam, phi = params
        x = lam * np.power(y, phi)
        return (
            math.log(beta * phi * lam)
            + (phi - 1.0) * np.log(y)
            - x
            + (beta - 1.0) * np.log(-np.expm1(-x))
        )

    def score(self, params, y):
        beta, lam, phi = params
        log_y = np.log(y)
        y_phi = np.power(y, phi)
        x = lam * y_phi
        log_g = np.log(-np.expm1(-x))
        ratio = 1.0 / np.expm1(x)  # e^-x / (1 - e^-x)
        n = y.size
        d_beta = n / beta + np.sum(log_g)
        d_lam = n / lam - np.sum(y_phi) + (beta - 1.0) * np.sum(y_phi * ratio)
        d_phi = (
            n / phi
            + np.sum(log_y)
            - np.sum(x * log_y)
            + (beta - 1.0) * np.sum(x * log_y * ratio)
        )
        return np.array([d_beta, d_lam, d_phi])

    def initial_points(self, y):
        scale, shape = menon_start(y)
        rate = scale ** (-shape)
        return [
            np.array([1.0, rate, shape]),
            np.array([2.0, rate, 0.7 * shape]),
            np.array([0.5, rate, 1.3 * shape]),
        ]


class TransmutedWeibullModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.TRANSMUTED_WEIBULL,
        param_count=3,
        param_names=("beta", "lambda", "phi"),
        param_domains=((-1.0, 1.0), _POS, _POS),
        closed_params=("beta",),
        label="Transmuted Weibull",
    )

    def log_pdf(self, params, y):
        beta, lam, phi = params
        x = lam * np.power(y, phi)
        return (
            math.log(phi * lam)
            + (phi - 1.0) * np.log(y)
            - x
            + np.log(1.0 - beta + 2.0 * beta * np.exp(-x))
        )

    def score(self, params, y):
        beta, lam, phi = params
        log_y = np.log(y)
        y_phi = np.power(y, phi)
        x = lam * y_phi
        e = np.exp(-x)
        d = 1.0 - beta + 2.0 * beta * e
        n = y.size
        d_beta = np.sum((2.0 * e - 1.0) / d)
        d_lam = n / lam - np.sum(y_phi) - np.sum(2.0 * beta * e * y_phi / d)
        d_phi = (
            n / phi
            + np.sum(log_y)
            - np.sum(x * log_y)
            - np.sum(2.0 * beta * e * x * log_y / d)
        )
        return np.array([d_beta, d_lam, d_phi])

    def initial_points(self, y):
        scale, shape = menon_start(y)
        rate = scale ** (-shape)
        return [
            np.array([0.0, rate, shape]),
            np.array([0.5, rate, shape]),
            np.array([-0.5, rate, shape]),
        ]
