# smptw/models/sine_alpha_power.py
# Sine alpha power Weibull
# - Weibull base G = 1 - exp(-lambda y^beta) (beta shape, lambda rate)
# - Alpha power transform H = (phi^G - 1) / (phi - 1); H = G when phi = 1
# - Sine-G outer layer F = sin(pi/2 * H), f = pi/2 * cos(pi/2 * H) * h
# Score by central differences (base class).

import math

import numpy as np

from smptw.config import settings
from smptw.models.base_model import BaseLifetimeModel
from smptw.models.weibull import menon_start
from smptw.schema import ModelId, ModelSpec

_POS = (0.0, math.inf)


class SineAlphaPowerWeibullModel(BaseLifetimeModel):
    spec = ModelSpec(
        model_id=ModelId.SINE_ALPHA_POWER_WEIBULL,
        param_count=3,
        param_names=("beta", "lambda", "phi"),
        param_domains=(_POS, _POS, _POS),
        label="Sine alpha power Weibull",
    )

    def log_pdf(self, params, y):
        beta, lam, alpha = params
        x = lam * np.power(y, beta)
        gbar = np.exp(-x)
        log_weibull = math.log(lam * beta) + (beta - 1.0) * np.log(y) - x

        if abs(alpha - 1.0) < settings.LAMBDA_ONE_TOL:
            log_h = log_weibull
            one_minus_h = gbar
        else:
            log_alpha = math.log(alpha)
            d = alpha - 1.0
            # h = log(alpha)/(alpha-1) * alpha^G * g
            log_h = math.log(math.log1p(d) / d) + (-np.expm1(-x)) * log_alpha + log_weibull
            # 1 - H = alpha (1 - alpha^(-Gbar)) / (alpha - 1)
            one_minus_h = alpha * (-np.expm1(-gbar * log_alpha)) / d

        # cos(pi/2 H) = sin(pi/2 (1 - H))
        return math.log(math.pi / 2.0) + np.log(np.sin(0.5 * math.pi * one_minus_h)) + log_h

    def initial_points(self, y):
        scale, shape = menon_start(y)
        rate = scale ** (-shape)
        return [
            np.array([shape, rate, 2.0]),
            np.array([shape, rate, 0.5]),
            np.array([0.8 * shape, 0.5 * rate, 5.0]),
        ]
