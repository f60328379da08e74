"""Plot data for before/after comparisons: KDE curves, jitter strips, QQ pairs, scatters."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import stats

from autonorm.core.exceptions import DegenerateInputError, DomainError
from autonorm.models import PlotKind, PlotSeries
from autonorm.services.normality.constants import HAZEN_OFFSET, IQR_TO_SIGMA, SILVERMAN_FACTOR
from autonorm.services.normality.stats_core import as_vector, is_constant, std_normal_quantile


def silverman_bandwidth(x: ArrayLike) -> float:
    """h = 0.9 * min(std, IQR / 1.34) * n^(-1/5); falls back to std when the IQR is zero."""
    values = as_vector(x)
    std = float(np.std(values, ddof=1))
    q75, q25 = np.percentile(values, [75, 25])
    spread = min(std, float(q75 - q25) / IQR_TO_SIGMA)
    if spread <= 0:
        spread = std
    return SILVERMAN_FACTOR * spread * values.size ** (-1 / 5)


def kde_curve(x: ArrayLike, eval_points: int = 512, label: str = "") -> PlotSeries:
    values = as_vector(x)
    values = values[np.isfinite(values)]
    if values.size < 2:
        raise DegenerateInputError("Density estimate needs at least two finite values.")
    if is_constant(values):
        raise DegenerateInputError("Density estimate is undefined for a constant feature.")
    if eval_points < 2:
        raise DomainError(f"eval_points must be >= 2, got {eval_points}.")

    bandwidth = silverman_bandwidth(values)
    # gaussian_kde scales its factor by the sample std (ddof=1).
    estimator = stats.gaussian_kde(values, bw_method=bandwidth / float(np.std(values, ddof=1)))
    grid = np.linspace(values.min() - 3 * bandwidth, values.max() + 3 * bandwidth, eval_points)
    density = np.clip(estimator(grid), 0.0, None)
    return PlotSeries(kind=PlotKind.KDE, x=grid, y=density, label=label)


def jitter_series(x: ArrayLike, label: str = "") -> PlotSeries:
    """Data strip whose vertical coordinate follows the original data order."""
    values = as_vector(x)
    finite = np.isfinite(values)
    order = np.arange(1, values.size + 1, dtype=np.float64) / (values.size + 1)
    return PlotSeries(kind=PlotKind.JITTER, x=values[finite], y=order[finite], label=label)


def qq_points(z: ArrayLike, m: int, seed: int, label: str = "") -> PlotSeries:
    values = as_vector(z)
    values = values[np.isfinite(values)]
    n = values.size
    if m < 2:
        raise DomainError(f"QQ plot needs m >= 2, got {m}.")
    if m > n:
        raise DomainError(f"QQ subsample size m={m} exceeds the number of values n={n}.")

    if m < n:
        rng = np.random.default_rng(seed)
        values = values[rng.choice(n, size=m, replace=False)]
    sample = np.sort(values)
    positions = (np.arange(1, m + 1) - HAZEN_OFFSET) / m
    theoretical = std_normal_quantile(positions)
    return PlotSeries(kind=PlotKind.QQ, x=theoretical, y=sample, label=label)


def scatter_series(x: ArrayLike, y: ArrayLike, label: str = "") -> PlotSeries:
    first = as_vector(x)
    second = as_vector(y)
    if first.size != second.size:
        raise DomainError("Scatter coordinates must have the same length.")
    keep = np.isfinite(first) & np.isfinite(second)
    return PlotSeries(kind=PlotKind.SCATTER, x=first[keep], y=second[keep], label=label)
