# smptw/models/smp_weibull.py
# SMP-transformed Weibull models
# - smptw:          two-parameter SMPtW(lambda, phi), unit scale
# - smp_weibull_3p: SMP transform of the two-parameter Weibull,
#                   f(y; beta, lambda, phi) = f_SMPtW(y / beta; lambda, phi) / beta
# Both with analytic scores.

import math

import numpy as np

from smptw.config import settings
from smptw.models.base_model import BaseLifetimeModel
from smptw.models.weibull import menon_start, standard_weibull_shape
from smptw.schema import ModelId, ModelSpec, SmptwParams
from smptw.services.distribution import log_pdf as smptw_log_pdf

_POS = (0.0, math.inf)


def lambda_score_constant(lam: float) -> float:
    """
    1/(lambda log lambda) - 1/(lambda - 1), the per-observation constant of the
    lambda-score. Removable singularity at lambda = 1; a Taylor series in
    e = lambda - 1 is used for |e| < 1e-4.
    """
    e = lam - 1.0
    if abs(e) < 1e-4:
        return -0.5 + 5.0 * e / 12.0 - 3.0 * e * e / 8.0
    return 1.0 / (lam * math.log(lam)) - 1.0 / e


def smptw_score(lam: float, phi: float, y: np.ndarray, scale: float = 1.0) -> np.ndarray:
    """
    Gradient of the SMPtW log-likelihood for data y / scale.

    Returns:
        np.ndarray: (d/d lambda, d/d phi), plus d/d scale first when scale != 1
            is being estimated by the caller
    """
    log_v = np.log(y) - math.log(scale)
    z = np.exp(phi * log_v)
    w = np.exp(-z)
    big_l = 0.0 if abs(lam - 1.0) < settings.LAMBDA_ONE_TOL else math.log(lam)
    n = y.size
    d_lam = np.sum(w) / lam + n * lambda_score_constant(lam)
    d_phi = n / phi + np.sum(log_v * (1.0 - z * (1.0 + big_l * w)))
    d_scale = (phi / scale) * np.sum(big_l * z * w + z - 1.0)
    return np.array([d_scale, d_lam, d_phi])


class SmptwModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.SMPTW,
        param_count=2,
        param_names=("lambda", "phi"),
        param_domains=(_POS, _POS),
        label="SMP transformed Weibull (2P)",
    )

    def log_pdf(self, params, y):
        lam, phi = params
        return np.asarray(smptw_log_pdf(SmptwParams(lambda_=lam, phi=phi), y))

    def score(self, params, y):
        lam, phi = params
        return smptw_score(lam, phi, y)[1:]

    def initial_points(self, y):
        phi0 = standard_weibull_shape(y)
        return [np.array([2.0, phi0]), np.array([0.5, phi0])]


class SmpWeibull3pModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.SMP_WEIBULL_3P,
        param_count=3,
        param_names=("beta", "lambda", "phi"),
        param_domains=(_POS, _POS, _POS),
        label="SMP transformed Weibull",
    )

    def log_pdf(self, params, y):
        beta, lam, phi = params
        base = smptw_log_pdf(SmptwParams(lambda_=lam, phi=phi), np.asarray(y) / beta)
        return np.asarray(base) - math.log(beta)

    def score(self, params, y):
        beta, lam, phi = params
        return smptw_score(lam, phi, y, scale=beta)

    def initial_points(self, y):
        # The likelihood has separate lambda > 1 and lambda < 1 modes; small
        # lambda starts reach the second one.
        scale, shape = menon_start(y)
        return [
            np.array([scale, 2.0, shape]),
            np.array([scale, 0.5, shape]),
            np.array([scale, 0.05, shape]),
            np.array([1.0, 0.05, standard_weibull_shape(y)]),
        ]
