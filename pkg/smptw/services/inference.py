# smptw/services/inference.py
# Maximum-likelihood inference
# - log_likelihood / score: SMPtW closed-form sums (independent of the pointwise pdf)
# - MleEngine: generic optimizer shared by every model in smptw.models
#   (BFGS on the unconstrained scale -> Nelder-Mead fallback -> Newton polish)
# - fit_mle, wald_interval, information_criteria
# - info logs: completed fits; debug logs: starts, fallbacks, singular information

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from scipy import optimize, stats

from smptw.config import settings
from smptw.core.errors import (AiccUnavailableError, DomainError,
                               StdErrorUnavailableError)
from smptw.models import BaseLifetimeModel, as_lifetime_data
from smptw.models.smp_weibull import SmptwModel, smptw_score
from smptw.schema import (ConfidenceInterval, FitResult, InformationCriteria,
                          SmptwParams)
from smptw.services.distribution import smp_log_constant

# Parameters whose unconstrained image exceeds this are treated as running
# off to a boundary; such fits are never reported as converged.
THETA_LIMIT = 30.0
_BIG = 1e300


# --------------------------------------------------------
# SMPtW likelihood
# --------------------------------------------------------
def log_likelihood(p: SmptwParams, data: Sequence[float]) -> float:
    """
    l = (log lam) sum e^{-y^phi} + n log(log lam / (lam - 1)) + n log phi
        + (phi - 1) sum log y - sum y^phi

    Returns:
        float: log-likelihood, or -inf when the density underflows

    Raises:
        DomainError: empty data or a nonpositive / non-finite observation
    """
    y = as_lifetime_data(data)
    n = y.size
    z = np.power(y, p.phi)
    value = n * math.log(p.phi) + (p.phi - 1.0) * float(np.sum(np.log(y))) - float(np.sum(z))
    if not p.is_weibull:
        value += p.log_lambda * float(np.sum(np.exp(-z))) + n * smp_log_constant(p)
    return value if math.isfinite(value) else -math.inf


def score(p: SmptwParams, data: Sequence[float]) -> Tuple[float, float]:
    """
    (dl/d lambda, dl/d phi):
    dl/d lambda = (1/lam) sum e^{-y^phi} + n/(lam log lam) - n/(lam - 1)
    dl/d phi    = -(log lam) sum y^phi log y e^{-y^phi} + n/phi + sum log y - sum y^phi log y
    """
    y = as_lifetime_data(data)
    grad = smptw_score(p.lambda_, p.phi, y)
    return float(grad[1]), float(grad[2])


# --------------------------------------------------------
# Generic MLE engine
# --------------------------------------------------------
class MleEngine:
    """
    Maximum-likelihood fitting for any BaseLifetimeModel.

    The optimizer runs on theta = model.to_theta(params); the reported
    gradient norm, Hessian and covariance are on the natural parameter scale.
    """

    def __init__(
        self,
        model: BaseLifetimeModel,
        max_iter: Optional[int] = None,
        gradient_tol: Optional[float] = None,
    ):
        self.model = model
        self.max_iter = max_iter or settings.FIT_MAX_ITER
        self.gradient_tol = gradient_tol or settings.FIT_GRADIENT_TOL

    # --------------------------------------------------------
    # Objective on the unconstrained scale
    # --------------------------------------------------------
    def _negloglik(self, theta: np.ndarray, y: np.ndarray) -> float:
        ll = self.model.log_likelihood(self.model.from_theta(theta), y)
        return -ll if math.isfinite(ll) else _BIG

    def _neg_gradient(self, theta: np.ndarray, y: np.ndarray) -> np.ndarray:
        params = self.model.from_theta(theta)
        if not self.model.spec.contains(params):
            return np.zeros_like(theta)
        with np.errstate(all="ignore"):
            g = self.model.score(params, y) * self.model.theta_jacobian(theta)
        return -np.nan_to_num(g, nan=0.0, posinf=0.0, neginf=0.0)

    def _score_norm(self, params: np.ndarray, y: np.ndarray) -> float:
        with np.errstate(all="ignore"):
            g = self.model.score(params, y)
        value = float(np.linalg.norm(g))
        return value if math.isfinite(value) else math.inf

    # --------------------------------------------------------
    # Single start
    # --------------------------------------------------------
    def _optimize(self, theta0: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, int, str]:
        res = optimize.minimize(
            self._negloglik,
            theta0,
            args=(y,),
            jac=self._neg_gradient,
            method="BFGS",
            options={"maxiter": self.max_iter, "gtol": 1e-9},
        )
        theta, iterations, message = res.x, int(res.nit), str(res.message)

        if not res.success or res.fun >= _BIG:
            logger.debug(f"[Inference] BFGS stopped ({res.message}); falling back to Nelder-Mead")
            start = res.x if res.fun < _BIG else theta0
            nm = optimize.minimize(
                self._negloglik,
                start,
                args=(y,),
                method="Nelder-Mead",
                options={"maxiter": 4 * self.max_iter, "xatol": 1e-10, "fatol": 1e-12},
            )
            iterations += int(nm.nit)
            if nm.fun <= res.fun:
                theta, message = nm.x, str(nm.message)

        theta, steps = self._newton_polish(theta, y)
        return theta, iterations + steps, message

    def _theta_hessian(self, theta: np.ndarray, y: np.ndarray) -> np.ndarray:
        k = theta.size
        hess = np.empty((k, k))
        for i in range(k):
            h = max(1e-5, 1e-5 * abs(theta[i]))
            up, down = theta.copy(), theta.copy()
            up[i] += h
            down[i] -= h
            hess[:, i] = (self._neg_gradient(down, y) - self._neg_gradient(up, y)) / (2 * h)
        return 0.5 * (hess + hess.T)

    def _newton_polish(self, theta: np.ndarray, y: np.ndarray, max_steps: int = 25) -> Tuple[np.ndarray, int]:
        """Damped Newton steps on the score; each step must not lower the likelihood."""
        current = np.asarray(theta, dtype=float)
        f_cur = self._negloglik(current, y)
        g_norm = self._score_norm(self.model.from_theta(current), y)
        for step in range(max_steps):
            if g_norm <= 0.1 * self.gradient_tol:
                return current, step
            hess = self._theta_hessian(current, y)
            grad = -self._neg_gradient(current, y)
            try:
                if np.any(np.linalg.eigvalsh(hess) >= 0):
                    return current, step
                delta = -np.linalg.solve(hess, grad)
            except np.linalg.LinAlgError:
                return current, step

            accepted = False
            t = 1.0
            for _ in range(20):
                cand = current + t * delta
                f_new = self._negloglik(cand, y)
                if f_new <= f_cur + 1e-12 * max(1.0, abs(f_cur)):
                    new_norm = self._score_norm(self.model.from_theta(cand), y)
                    if new_norm < g_norm:
                        current, f_cur, g_norm = cand, f_new, new_norm
                        accepted = True
                        break
                t *= 0.5
            if not accepted:
                return current, step
        return current, max_steps

    # --------------------------------------------------------
    # Observed information
    # --------------------------------------------------------
    def observed_information(self, params: np.ndarray, y: np.ndarray) -> np.ndarray:
        """-Hessian of the log-likelihood by central differences of the score."""
        k = params.size
        info = np.empty((k, k))
        for i in range(k):
            h = self.model.fd_step(params, i, 1e-5)
            up, down = params.copy(), params.copy()
            up[i] += h
            down[i] -= h
            info[:, i] = (self.model.score(down, y) - self.model.score(up, y)) / (2 * h)
        return 0.5 * (info + info.T)

    def _covariance(self, params: np.ndarray, y: np.ndarray) -> Optional[np.ndarray]:
        try:
            with np.errstate(all="ignore"):
                info = self.observed_information(params, y)
            if not np.all(np.isfinite(info)) or np.any(np.linalg.eigvalsh(info) <= 0):
                logger.debug(f"[Inference] observed information not positive definite for {self.model.model_id}")
                return None
            cov = np.linalg.inv(info)
        except np.linalg.LinAlgError:
            logger.debug(f"[Inference] observed information singular for {self.model.model_id}")
            return None
        cov = 0.5 * (cov + cov.T)
        if not np.all(np.isfinite(cov)) or np.any(np.diag(cov) < 0):
            return None
        return cov

    # --------------------------------------------------------
    # Public API
    # --------------------------------------------------------
    def fit(self, data: Sequence[float], init: Optional[Sequence[float]] = None) -> FitResult:
        """
        Maximize the model log-likelihood.

        Args:
            data: Positive observations (order does not matter)
            init: Optional start point; when given it is the only start

        Returns:
            FitResult: converged=False (never an exception) when the optimizer
                stalls, the score stays above FIT_GRADIENT_TOL, or a parameter
                runs off to a domain boundary

        Raises:
            DomainError: fewer than max(5, k + 2) observations, invalid data or init
        """
        model = self.model
        k = model.param_count
        y = np.sort(as_lifetime_data(data, min_size=max(5, k + 2)))

        if init is not None:
            starts: List[np.ndarray] = [model.check_params(init)]
        else:
            starts = [s for s in model.initial_points(y) if model.spec.contains(s)]
        if not starts:
            raise DomainError(f"no valid start point for {model.model_id}")

        best: Optional[Tuple[float, np.ndarray, int, str]] = None
        for start in starts:
            theta, iterations, message = self._optimize(model.to_theta(start), y)
            ll = model.log_likelihood(model.from_theta(theta), y)
            logger.debug(
                f"[Inference] {model.model_id} start={np.round(start, 6).tolist()} -> loglik={ll:.6f}"
            )
            if best is None or ll > best[0]:
                best = (ll, theta, iterations, message)

        ll, theta, iterations, message = best
        params = model.from_theta(theta)
        g_norm = self._score_norm(params, y)
        converged = (
            math.isfinite(ll)
            and g_norm <= self.gradient_tol
            and bool(np.all(np.abs(theta) < THETA_LIMIT))
        )
        if not converged and not message:
            message = "score norm above tolerance"
        elif not converged:
            message = f"{message}; score norm {g_norm:.3e}"

        cov = self._covariance(params, y) if math.isfinite(ll) else None
        std_errors = np.sqrt(np.diag(cov)).tolist() if cov is not None else None

        logger.info(
            f"[Inference] fitted {model.model_id} n={y.size} loglik={ll:.4f} "
            f"converged={converged} |score|={g_norm:.2e}"
        )
        return FitResult(
            model_id=str(model.model_id),
            param_names=model.param_names,
            estimates=params.tolist(),
            std_errors=std_errors,
            covariance=cov.tolist() if cov is not None else None,
            log_likelihood=ll if math.isfinite(ll) else -1e308,
            converged=converged,
            iterations=iterations,
            gradient_norm=g_norm if math.isfinite(g_norm) else 1e308,
            n_obs=int(y.size),
            message=message if not converged else "",
        )


def fit_mle(data: Sequence[float], init: Optional[SmptwParams] = None) -> FitResult:
    """
    MLE of (lambda, phi). Without init, starts at phi0 from the standard
    Weibull fit with lambda0 in {2, 0.5} and keeps the better optimum.
    """
    start = None if init is None else [init.lambda_, init.phi]
    return MleEngine(SmptwModel()).fit(data, init=start)


# --------------------------------------------------------
# Intervals and criteria
# --------------------------------------------------------
def wald_interval(
    fit: FitResult, param_index: int, level: Optional[float] = None
) -> ConfidenceInterval:
    """
    theta_hat +- z * se with z the standard-normal (1 + level)/2 quantile.

    Raises:
        StdErrorUnavailableError: fit not converged or without standard errors
        DomainError: level outside (0, 1) or bad index
    """
    level = settings.CONFIDENCE_LEVEL if level is None else float(level)
    if not 0 < level < 1:
        raise DomainError(f"confidence level must lie in (0, 1), got {level}")
    if not 0 <= param_index < len(fit.estimates):
        raise DomainError(f"parameter index {param_index} out of range")
    if not fit.converged or not fit.std_errors_available:
        raise StdErrorUnavailableError(
            f"no standard errors for {fit.model_id} (converged={fit.converged})"
        )
    z = float(stats.norm.ppf(0.5 + level / 2.0))
    estimate = fit.estimates[param_index]
    half = z * fit.std_errors[param_index]
    return ConfidenceInterval(lower=estimate - half, upper=estimate + half, level=level)


def information_criteria(log_lik: float, k: int, n: int) -> InformationCriteria:
    """
    AIC = 2k - 2l, BIC = k log n - 2l, AICc = AIC + 2k(k+1)/(n-k-1),
    HQIC = 2k log log n - 2l.

    Raises:
        AiccUnavailableError: n <= k + 1
    """
    if k < 1 or n < 1:
        raise DomainError(f"k and n must be positive, got k={k}, n={n}")
    if n <= k + 1:
        raise AiccUnavailableError(n, k)
    aic = 2 * k - 2 * log_lik
    return InformationCriteria(
        aic=aic,
        bic=k * math.log(n) - 2 * log_lik,
        aicc=aic + 2 * k * (k + 1) / (n - k - 1),
        hqic=2 * k * math.log(math.log(n)) - 2 * log_lik,
    )
