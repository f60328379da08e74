from __future__ import annotations

import logging
import re
from pathlib import Path

from autonorm.core.exceptions import ConfigError
from autonorm.models import (
    FeatureMatrix,
    FeatureReport,
    FeatureVector,
    PlotSeries,
    RenderOptions,
    RunConfig,
    TransformConfig,
    unique_feature_names,
)
from autonorm.services.normality.diagnostics import jitter_series, kde_curve, qq_points, scatter_series
from autonorm.services.normality.rendering import render_svg
from autonorm.services.normality.transform import pipeline_single_beta

logger = logging.getLogger(__name__)

_UNSAFE_FILENAME_CHARS = re.compile(r"[^A-Za-z0-9._-]+")


def _slug(name: str) -> str:
    return _UNSAFE_FILENAME_CHARS.sub("_", name).strip("._") or "feature"


class DiagnosticsRunMixin:
    def _assert_scatter_features(self, matrix: FeatureMatrix, run: RunConfig) -> None:
        if run.scatter is None:
            return
        missing = [name for name in run.scatter if name not in matrix.names]
        if missing:
            raise ConfigError(f"Unknown feature name(s) in --scatter: {', '.join(missing)}.")

    def write_diagnostics(
        self,
        before: FeatureMatrix,
        after: FeatureMatrix,
        reports: list[FeatureReport],
        run: RunConfig,
    ) -> list[Path]:
        if run.diagnostics_dir is None:
            return []
        self._assert_scatter_features(before, run)
        directory = run.diagnostics_dir
        cfg = run.transform_config()
        slugs = unique_feature_names([_slug(name) for name in before.names])
        written: list[Path] = []

        for raw, transformed, report, slug in zip(before.features, after.features, reports, slugs, strict=True):
            if report.degenerate or report.n < 2:
                logger.warning("diagnostics.skip name=%s reason=degenerate n=%d", raw.name, report.n)
                continue
            written.extend(self._feature_plots(raw, transformed, report, slug, directory, cfg, run))

        if run.scatter is not None:
            written.extend(self._scatter_plots(before, after, run.scatter, directory))
        return written

    def _feature_plots(
        self,
        raw: FeatureVector,
        transformed: FeatureVector,
        report: FeatureReport,
        slug: str,
        directory: Path,
        cfg: TransformConfig,
        run: RunConfig,
    ) -> list[Path]:
        values = raw.values[raw.finite_mask]
        after_values = transformed.values[transformed.finite_mask]
        # Standardization only: the beta = 0 pipeline output.
        baseline = pipeline_single_beta(values, 0.0, cfg).transformed
        m = min(run.qq_points, values.size)
        beta_label = f"beta={report.chosen_beta:g}"

        plots: list[tuple[str, list[PlotSeries], RenderOptions]] = [
            (
                "kde_before",
                [kde_curve(values, run.kde_points, label="KDE"), jitter_series(values, label="data")],
                RenderOptions(title=f"{raw.name} before", x_label="value", y_label="density"),
            ),
            (
                "kde_after",
                [kde_curve(after_values, run.kde_points, label="KDE"), jitter_series(after_values, label="data")],
                RenderOptions(title=f"{raw.name} after ({beta_label})", x_label="value", y_label="density"),
            ),
            (
                "qq_before",
                [qq_points(baseline, m, run.seed, label="standardized")],
                RenderOptions(title=f"{raw.name} before", x_label="normal quantile", y_label="sample quantile"),
            ),
            (
                "qq_after",
                [qq_points(after_values, m, run.seed, label="transformed")],
                RenderOptions(title=f"{raw.name} after ({beta_label})", x_label="normal quantile", y_label="sample quantile"),
            ),
        ]
        return [render_svg(series, directory / f"{slug}_{suffix}.svg", options) for suffix, series, options in plots]

    def _scatter_plots(
        self,
        before: FeatureMatrix,
        after: FeatureMatrix,
        pair: tuple[str, str],
        directory: Path,
    ) -> list[Path]:
        first, second = pair
        stem = f"scatter_{_slug(first)}_{_slug(second)}"
        written = []
        for stage, matrix in (("before", before), ("after", after)):
            a: FeatureVector = matrix.feature(first)
            b: FeatureVector = matrix.feature(second)
            series = scatter_series(a.values, b.values, label=stage)
            options = RenderOptions(title=f"{first} vs {second} ({stage})", x_label=first, y_label=second)
            written.append(render_svg([series], directory / f"{stem}_{stage}.svg", options))
        return written
