# smptw/services/sampler.py
# Random variate generation by inversion
# - SeededStream -> numpy Generator (PCG64, one SeedSequence substream per stream_id)
# - sample / sample_from_uniforms: Y = Q(U)
# - empirical_ks_distance: sup |F_n - F| via scipy.stats.kstest

from __future__ import annotations

import numpy as np
from scipy import stats

from smptw.core.errors import DomainError
from smptw.schema import SeededStream, SmptwParams
from smptw.services.distribution import cdf, quantile

# Uniforms are kept inside [2^-53, 1 - 2^-53] so Q(U) is always finite.
U_EPS = 2.0**-53


def make_generator(stream: SeededStream) -> np.random.Generator:
    """Independent, reproducible generator for (seed, stream_id)."""
    seq = np.random.SeedSequence(stream.seed, spawn_key=(stream.stream_id,))
    return np.random.Generator(np.random.PCG64(seq))


def draw_uniforms(stream: SeededStream, n: int) -> np.ndarray:
    if n < 0:
        raise DomainError(f"sample size must be nonnegative, got {n}")
    u = make_generator(stream).random(n)
    return np.clip(u, U_EPS, 1.0 - U_EPS)


def sample_from_uniforms(p: SmptwParams, u) -> np.ndarray:
    """Map uniforms through the quantile function."""
    u = np.clip(np.asarray(u, dtype=float), U_EPS, 1.0 - U_EPS)
    return np.atleast_1d(quantile(p, u))


def sample(p: SmptwParams, n: int, stream: SeededStream) -> np.ndarray:
    """
    n i.i.d. SMPtW(lambda, phi) variates.

    The same (params, n, stream) always yields the same values; a different
    stream_id yields an independent sample.

    Raises:
        DomainError: n < 1
    """
    if n < 1:
        raise DomainError(f"sample size must be at least 1, got {n}")
    return sample_from_uniforms(p, draw_uniforms(stream, n))


def empirical_ks_distance(data, p: SmptwParams) -> float:
    """
    Kolmogorov-Smirnov distance sup |F_n - F| between the empirical CDF of data and F.

    Raises:
        DomainError: empty data, or a negative or NaN value
    """
    arr = np.asarray(data, dtype=float).ravel()
    if arr.size == 0:
        raise DomainError("KS distance needs at least one observation")
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise DomainError("KS data must be nonnegative numbers")
    return float(stats.kstest(arr, lambda y: cdf(p, y)).statistic)
