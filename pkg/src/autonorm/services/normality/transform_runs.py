from __future__ import annotations

import logging
from time import perf_counter

from autonorm.models import FeatureMatrix, RunConfig, TransformRunResult
from autonorm.services.normality.dataio import read_matrix, write_matrix, write_report
from autonorm.services.normality.search import transform_matrix

logger = logging.getLogger(__name__)


class TransformRunMixin:
    def load_matrix(self, run: RunConfig) -> FeatureMatrix:
        return read_matrix(run.input_path, run.matrix_format())

    def run_transform(self, run: RunConfig) -> TransformRunResult:
        started = perf_counter()
        logger.info(
            "run.start input=%s features_orientation=%s threads=%d grid_size=%d",
            run.input_path,
            run.orientation.value,
            run.threads,
            len(run.beta_grid),
        )
        before = self.load_matrix(run)
        if run.diagnostics_enabled:
            self._assert_scatter_features(before, run)

        after, reports = transform_matrix(before, run.transform_config(), threads=run.threads)
        if run.output_path is not None:
            write_matrix(after, run.output_path, run.matrix_format())
        if run.report_path is not None:
            write_report(reports, run.report_path, run.config_echo())

        diagnostic_files = []
        if run.diagnostics_enabled:
            diagnostic_files = self.write_diagnostics(before, after, reports, run)

        logger.info(
            "run.end features=%d degenerate=%d diagnostics=%d duration_ms=%.2f",
            len(reports),
            sum(1 for report in reports if report.degenerate),
            len(diagnostic_files),
            (perf_counter() - started) * 1000.0,
        )
        return TransformRunResult(before=before, after=after, reports=reports, diagnostic_files=diagnostic_files)
