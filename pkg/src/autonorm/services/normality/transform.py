"""Shifted-logarithm family, robust standardization and extreme-value winsorisation.

One call of `pipeline_single_beta` runs the transform and standardization steps
for a single beta and scores the result with the Anderson-Darling statistic.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import ArrayLike

from autonorm.core.exceptions import DegenerateInputError, DomainError
from autonorm.models import TransformConfig, TransformOutcome
from autonorm.services.normality.adstat import anderson_darling
from autonorm.services.normality.constants import DEGENERATE_AD_SENTINEL, LOG_FOUR_PI
from autonorm.services.normality.stats_core import (
    as_vector,
    gumbel_quantile,
    mean_abs_dev_from_median,
    mean_and_std,
    median,
)

logger = logging.getLogger(__name__)


def shifted_log_transform(x: ArrayLike, beta: float) -> np.ndarray:
    values = as_vector(x)
    if values.size == 0:
        raise DomainError("Cannot transform an empty feature.")
    if beta == 0:
        return values.copy()

    low = float(np.min(values))
    high = float(np.max(values))
    data_range = high - low
    if data_range == 0:
        raise DegenerateInputError("Feature has zero range; the shifted logarithm is undefined.")

    shift = data_range / abs(beta)
    if beta > 0:
        return np.log(values - low + shift)
    return -np.log(high - values + shift)


def standardize_median_mad(x: ArrayLike) -> np.ndarray:
    values = as_vector(x)
    spread = mean_abs_dev_from_median(values)
    if spread == 0:
        return np.zeros_like(values)
    return (values - median(values)) / spread


def gumbel_threshold(n: int, p: float) -> float:
    """Winsorisation level L = G^-1(p) * a_n + b_n for the maximum of n standard normals."""
    if n < 2:
        raise DomainError(f"Gumbel threshold needs n >= 2, got {n}.")
    root = math.sqrt(2.0 * math.log(n))
    a_n = 1.0 / root
    b_n = root - (math.log(math.log(n)) + LOG_FOUR_PI) / root
    return gumbel_quantile(p) * a_n + b_n


def winsorise(x_dag: ArrayLike, level: float) -> tuple[np.ndarray, int]:
    if not level > 0:
        raise DomainError(f"Winsorisation level must be positive, got {level}.")
    values = as_vector(x_dag)
    count = int(np.count_nonzero(np.abs(values) > level))
    return np.clip(values, -level, level), count


def restandardize_mean_std(x: ArrayLike) -> np.ndarray:
    values = as_vector(x)
    center, scale = mean_and_std(values)
    if scale == 0:
        return np.zeros_like(values)
    return (values - center) / scale


def _degenerate_outcome(beta: float, n: int) -> TransformOutcome:
    zeros = np.zeros(n)
    # At beta = 0 the zero vector is still scored so selection can fall back to it.
    ad_stat = anderson_darling(zeros) if beta == 0 and n > 0 else DEGENERATE_AD_SENTINEL
    return TransformOutcome(beta=beta, transformed=zeros, ad_stat=ad_stat, winsorised_count=0, degenerate=True)


def pipeline_single_beta(x: ArrayLike, beta: float, cfg: TransformConfig) -> TransformOutcome:
    values = as_vector(x)
    n = values.size
    try:
        shaped = shifted_log_transform(values, beta)
    except DegenerateInputError:
        return _degenerate_outcome(beta, n)
    if mean_abs_dev_from_median(shaped) == 0:
        return _degenerate_outcome(beta, n)

    standardized = standardize_median_mad(shaped)
    threshold: float | None = None
    count = 0
    if cfg.winsorise and n >= 2:
        threshold = gumbel_threshold(n, cfg.gumbel_percentile)
        standardized, count = winsorise(standardized, threshold)
        if count > 0:
            standardized = restandardize_mean_std(standardized)

    return TransformOutcome(
        beta=beta,
        transformed=standardized,
        ad_stat=anderson_darling(standardized),
        winsorised_count=count,
        threshold=threshold,
        degenerate=False,
    )
