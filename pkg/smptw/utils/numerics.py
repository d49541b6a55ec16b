# smptw/utils/numerics.py
# Shared numerical kernel
# - Special functions: log_gamma, lower / upper incomplete gamma (non-regularized)
# - sum_series: the one truncation rule for every infinite series
# - integrate: adaptive quadrature on finite or half-infinite ranges
# - integrate_fourier: int_0^inf f(y) cos / sin(omega y) dy for slowly decaying f
# - find_root: bracketed Brent root finding
# Failures surface as DomainError / NumericError, never as NaN or warnings.

from __future__ import annotations

import math
import warnings
from typing import Callable, Optional, Sequence, Tuple

from scipy import integrate as sp_integrate
from scipy import optimize, special

from smptw.core.errors import (DomainError, NonConvergenceError, NumericError,
                               QuadratureError)
from smptw.schema import QuadratureConfig, SeriesConfig, SeriesSum

__all__ = [
    "log_gamma",
    "lower_incomplete_gamma",
    "upper_incomplete_gamma",
    "sum_series",
    "integrate",
    "integrate_fourier",
    "find_root",
]

RealFunction = Callable[[float], float]


def _require_positive(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"{name} must be positive and finite, got {x}")
    return x


def _require_nonneg(name: str, x: float) -> float:
    x = float(x)
    if math.isnan(x) or x < 0:
        raise DomainError(f"{name} must be nonnegative, got {x}")
    return x


# --------------------------------------------------------
# Special functions
# --------------------------------------------------------
def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    x = _require_positive("x", x)
    return float(special.gammaln(x))


def lower_incomplete_gamma(s: float, x: float) -> float:
    """
    gamma(s, x) = integral_0^x u^(s-1) e^(-u) du (non-regularized).

    Raises:
        DomainError: s <= 0 or x < 0
        NumericError: scipy could not evaluate the regularized function
    """
    s = _require_positive("s", s)
    x = _require_nonneg("x", x)
    if x == 0:
        return 0.0
    p = special.gammainc(s, x)
    if not math.isfinite(p):
        raise NumericError(f"regularized lower incomplete gamma failed at s={s}, x={x}")
    return float(p) * math.exp(special.gammaln(s))


def upper_incomplete_gamma(s: float, x: float) -> float:
    """Gamma(s, x) = Gamma(s) - gamma(s, x) (non-regularized)."""
    s = _require_positive("s", s)
    x = _require_nonneg("x", x)
    if x == 0:
        return math.exp(special.gammaln(s))
    q = special.gammaincc(s, x)
    if not math.isfinite(q):
        raise NumericError(f"regularized upper incomplete gamma failed at s={s}, x={x}")
    return float(q) * math.exp(special.gammaln(s))


# --------------------------------------------------------
# Series
# --------------------------------------------------------
def sum_series(
    term_fn: Callable[[int], float], cfg: Optional[SeriesConfig] = None
) -> SeriesSum:
    """
    Sum term_fn(0) + term_fn(1) + ... until two consecutive terms satisfy
    |term| < abs_tol + rel_tol * |partial sum|.

    Requiring two small terms in a row keeps alternating series (negative
    log-lambda) from stopping on an accidental near-zero term.

    Raises:
        NonConvergenceError: max_terms reached, or a term is not finite
    """
    cfg = cfg or SeriesConfig()
    terms: list[float] = []
    small_run = 0
    partial = 0.0

    for j in range(cfg.max_terms):
        term = float(term_fn(j))
        if not math.isfinite(term):
            raise NonConvergenceError(
                f"series term {j} is not finite ({term})", partial_sum=partial, terms=j
            )
        terms.append(term)
        partial = math.fsum(terms)
        if abs(term) < cfg.abs_tol + cfg.rel_tol * abs(partial):
            small_run += 1
            if small_run == 2:
                return SeriesSum(value=partial, terms=j + 1)
        else:
            small_run = 0

    raise NonConvergenceError(
        f"series did not converge within {cfg.max_terms} terms",
        partial_sum=partial,
        terms=cfg.max_terms,
    )


# --------------------------------------------------------
# Quadrature
# --------------------------------------------------------
def integrate(
    f: RealFunction,
    a: float,
    b: float,
    cfg: Optional[QuadratureConfig] = None,
    breakpoints: Sequence[float] = (),
) -> float:
    """
    Adaptive Gauss-Kronrod quadrature of f over (a, b); b may be +inf
    (QUADPACK maps the half line onto (0, 1]).

    Args:
        breakpoints: interior points where the range is split first, e.g. the
            location of a sharp peak.

    Raises:
        QuadratureError: the error estimate exceeds max(abs_tol, rel_tol*|I|)
            after max_subdivisions
    """
    cfg = cfg or QuadratureConfig()
    a = float(a)
    b = float(b)
    if math.isnan(a) or math.isnan(b) or a == math.inf:
        raise DomainError(f"invalid integration range ({a}, {b})")
    if a == b:
        return 0.0
    if b < a:
        return -integrate(f, b, a, cfg, breakpoints)

    cuts = sorted(c for c in breakpoints if a < c < b)
    edges = [a, *cuts, b]
    total = 0.0
    total_err = 0.0
    for lo, hi in zip(edges, edges[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", sp_integrate.IntegrationWarning)
            value, err = sp_integrate.quad(
                f,
                lo,
                hi,
                epsabs=cfg.abs_tol,
                epsrel=cfg.rel_tol,
                limit=cfg.max_subdivisions,
            )
        total += value
        total_err += err

    if not math.isfinite(total) or total_err > max(cfg.abs_tol, cfg.rel_tol * abs(total)) * 10:
        raise QuadratureError(
            f"quadrature on ({a}, {b}) did not converge: estimate={total}, error={total_err:.3e}",
            estimate=total,
            abs_error=total_err,
        )
    return total


# --------------------------------------------------------
# Root finding
# --------------------------------------------------------
def find_root(f: RealFunction, bracket: Tuple[float, float]) -> float:
    """
    Root of f inside bracket by Brent's method (bisection safeguarding
    secant / inverse quadratic steps).

    Raises:
        DomainError: f(lo) and f(hi) have the same strict sign
    """
    lo, hi = (float(v) for v in bracket)
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise DomainError(f"invalid bracket ({lo}, {hi})")
    f_lo = float(f(lo))
    f_hi = float(f(hi))
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if math.isnan(f_lo) or math.isnan(f_hi) or f_lo * f_hi > 0:
        raise DomainError(
            f"bracket ({lo}, {hi}) does not enclose a sign change: f={f_lo}, {f_hi}"
        )
    try:
        return float(
            optimize.brentq(f, lo, hi, xtol=1e-14, rtol=4 * 2.220446049250313e-16, maxiter=500)
        )
    except RuntimeError as e:
        raise NonConvergenceError(f"root finding failed: {e}") from e


def integrate_fourier(
    f: RealFunction,
    omega: float,
    kind: str,
    cfg: Optional[QuadratureConfig] = None,
    head_end: float = 0.0,
) -> float:
    """
    int_0^inf f(y) cos(omega y) dy (kind="cos") or the sine analogue, omega > 0.

    The head (0, c], c a whole number of half periods covering head_end, goes
    through `integrate` split at every half period. The tail (c, inf) uses
    QUADPACK's Fourier routine (QAWF), which extrapolates over cycles and so
    copes with slowly decaying f.

    Raises:
        DomainError: omega not positive and finite, or an unknown kind
        QuadratureError: the combined error estimate exceeds
            10 * max(abs_tol, rel_tol * max(|I|, 1))
    """
    cfg = cfg or QuadratureConfig()
    omega = _require_positive("omega", omega)
    if kind not in ("cos", "sin"):
        raise DomainError(f"kind must be 'cos' or 'sin', got {kind!r}")
    trig = math.cos if kind == "cos" else math.sin

    half = math.pi / omega
    k = min(max(1, math.ceil(float(head_end) / half)), 200)
    c = k * half
    head = integrate(lambda y: f(y) * trig(omega * y), 0.0, c, cfg, [i * half for i in range(1, k)])

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", sp_integrate.IntegrationWarning)
        tail, err = sp_integrate.quad(
            f, c, math.inf, weight=kind, wvar=omega,
            epsabs=cfg.abs_tol, limlst=200, limit=cfg.max_subdivisions,
        )
    total = head + tail
    if not math.isfinite(total) or err > 10 * max(cfg.abs_tol, cfg.rel_tol * max(abs(total), 1.0)):
        raise QuadratureError(
            f"Fourier tail on ({c}, inf) did not converge: estimate={total}, error={err:.3e}",
            estimate=total,
            abs_error=err,
        )
    return total
