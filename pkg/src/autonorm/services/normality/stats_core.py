"""Descriptive statistics and distribution functions shared by the pipeline.

All functions are pure and accept any one-dimensional array-like of finite reals.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy import special, stats

from autonorm.core.exceptions import DegenerateInputError, DomainError


def as_vector(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=np.float64).reshape(-1)


def is_constant(x: ArrayLike) -> bool:
    values = as_vector(x)
    return bool(values.size == 0 or np.all(values == values[0]))


def sample_skewness(x: ArrayLike) -> float:
    """Third standardized moment with 1/n-normalized central moments."""
    values = as_vector(x)
    if values.size < 2:
        raise DegenerateInputError("Skewness needs at least two values.")
    if is_constant(values):
        raise DegenerateInputError("Skewness is undefined for a constant feature.")
    return float(stats.skew(values, bias=True))


def median(x: ArrayLike) -> float:
    values = as_vector(x)
    if values.size == 0:
        raise DomainError("Median of an empty vector is undefined.")
    return float(np.median(values))


def mean_abs_dev_from_median(x: ArrayLike) -> float:
    values = as_vector(x)
    center = median(values)
    return float(np.mean(np.abs(values - center)))


def mean_and_std(x: ArrayLike) -> tuple[float, float]:
    """Sample mean and standard deviation with divisor n - 1."""
    values = as_vector(x)
    if values.size < 2:
        raise DegenerateInputError("Standard deviation needs at least two values.")
    return float(np.mean(values)), float(np.std(values, ddof=1))


def std_normal_log_cdf(z: ArrayLike) -> np.ndarray | float:
    """ln Phi(z), tail-safe; ln(1 - Phi(z)) is std_normal_log_cdf(-z)."""
    result = special.log_ndtr(z)
    if np.ndim(result) == 0:
        return float(result)
    return result


def std_normal_quantile(p: ArrayLike) -> np.ndarray | float:
    result = special.ndtri(p)
    if np.ndim(result) == 0:
        return float(result)
    return result


def gumbel_quantile(p: float) -> float:
    """Inverse of the standard Gumbel CDF G(x) = exp(-exp(-x))."""
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise DomainError(f"Gumbel quantile needs p in (0, 1), got {p}.")
    return float(stats.gumbel_r.ppf(p))


def gumbel_cdf(x: float) -> float:
    return float(stats.gumbel_r.cdf(x))
