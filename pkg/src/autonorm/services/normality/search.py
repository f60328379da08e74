"""Grid search over beta: run the pipeline for every grid value and keep the best."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import ArrayLike

from autonorm.core.exceptions import DegenerateInputError, DomainError
from autonorm.models import (
    FeatureMatrix,
    FeatureReport,
    FeatureVector,
    TransformConfig,
    TransformOutcome,
    symmetric_grid,
)
from autonorm.services.normality.stats_core import as_vector, sample_skewness
from autonorm.services.normality.transform import pipeline_single_beta

logger = logging.getLogger(__name__)


def default_grid() -> list[float]:
    return list(symmetric_grid())


def _skewness_or_none(x: np.ndarray) -> float | None:
    try:
        value = sample_skewness(x)
    except DegenerateInputError:
        return None
    return value if math.isfinite(value) else None


def _sign(value: float | None) -> float:
    if value is None or value == 0:
        return 0.0
    return math.copysign(1.0, value)


def _candidate_betas(cfg: TransformConfig, skew_sign: float) -> list[float]:
    if not cfg.restrict_by_skewness or skew_sign == 0:
        return list(cfg.beta_grid)
    return [beta for beta in cfg.beta_grid if beta == 0 or _sign(beta) == skew_sign]


def _selection_key(outcome: TransformOutcome, skew_sign: float) -> tuple[float, float, float, float]:
    # Lower is better: AD, then milder transform, then sign agreeing with skewness.
    # The last key only matters for exact ties at zero skewness.
    sign_mismatch = 0.0 if skew_sign == 0 or _sign(outcome.beta) in (0.0, skew_sign) else 1.0
    return (outcome.ad_stat, abs(outcome.beta), sign_mismatch, outcome.beta)


def _build_report(
    name: str,
    x: np.ndarray,
    best: TransformOutcome,
    baseline: TransformOutcome | None,
    skewness_before: float | None,
    short_sample: bool,
) -> FeatureReport:
    degenerate = best.degenerate
    return FeatureReport(
        feature_name=name,
        chosen_beta=best.beta,
        ad_before=baseline.ad_stat if baseline is not None else None,
        ad_after=best.ad_stat,
        skewness_before=skewness_before,
        skewness_after=None if degenerate else _skewness_or_none(best.transformed),
        winsorised_count=best.winsorised_count,
        threshold_L=best.threshold,
        degenerate=degenerate,
        n=int(x.size),
        short_sample=short_sample,
    )


def select_beta(x: ArrayLike, cfg: TransformConfig, name: str = "f0") -> tuple[FeatureReport, np.ndarray]:
    values = as_vector(x)
    if not np.all(np.isfinite(values)):
        raise DomainError(f"Feature '{name}' contains non-finite values; drop them before selection.")

    if values.size == 0:
        logger.warning("feature.empty name=%s", name)
        report = FeatureReport(
            feature_name=name,
            chosen_beta=0.0,
            ad_before=None,
            ad_after=None,
            skewness_before=None,
            skewness_after=None,
            winsorised_count=0,
            threshold_L=None,
            degenerate=True,
            n=0,
            short_sample=True,
        )
        return report, values.copy()

    skewness_before = _skewness_or_none(values)
    baseline = pipeline_single_beta(values, 0.0, cfg)

    if values.size < cfg.min_length:
        logger.warning("feature.short_sample name=%s n=%d min_length=%d beta=0", name, values.size, cfg.min_length)
        report = _build_report(name, values, baseline, baseline, skewness_before, short_sample=True)
        return report, baseline.transformed

    if baseline.degenerate:
        logger.warning("feature.degenerate name=%s n=%d", name, values.size)
        report = _build_report(name, values, baseline, baseline, skewness_before, short_sample=False)
        return report, baseline.transformed

    skew_sign = _sign(skewness_before)
    outcomes = [baseline]
    outcomes.extend(pipeline_single_beta(values, beta, cfg) for beta in _candidate_betas(cfg, skew_sign) if beta != 0)
    best = min(outcomes, key=lambda outcome: _selection_key(outcome, skew_sign))

    logger.info(
        "feature.select name=%s n=%d beta=%s ad_before=%.6f ad_after=%.6f winsorised=%d",
        name,
        values.size,
        best.beta,
        baseline.ad_stat,
        best.ad_stat,
        best.winsorised_count,
    )
    report = _build_report(name, values, best, baseline, skewness_before, short_sample=False)
    return report, best.transformed


def _select_feature(feature: FeatureVector, cfg: TransformConfig) -> tuple[FeatureReport, np.ndarray]:
    mask = feature.finite_mask
    report, transformed = select_beta(feature.values[mask], cfg, name=feature.name)
    output = np.array(feature.values, dtype=np.float64)
    output[mask] = transformed
    return report, output


def transform_matrix(
    m: FeatureMatrix,
    cfg: TransformConfig,
    threads: int = 1,
) -> tuple[FeatureMatrix, list[FeatureReport]]:
    """Select beta independently for every feature; output keeps shape and feature order.

    Non-finite cells (present only under na_policy=drop) are excluded from the
    statistics and returned unchanged in their positions.
    """
    if threads < 1:
        raise DomainError(f"threads must be >= 1, got {threads}.")

    if threads == 1 or len(m.features) == 1:
        results = [_select_feature(feature, cfg) for feature in m.features]
    else:
        with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="autonorm") as pool:
            results = list(pool.map(lambda feature: _select_feature(feature, cfg), m.features))

    reports = [report for report, _ in results]
    transformed = FeatureMatrix(
        features=[
            FeatureVector(name=feature.name, values=values)
            for feature, (_, values) in zip(m.features, results, strict=True)
        ],
        orientation=m.orientation,
    )
    return transformed, reports
