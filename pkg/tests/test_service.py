from __future__ import annotations

import json

import numpy as np
import pytest

from autonorm.cli.dependencies import clear_dependency_caches, get_service
from autonorm.core.exceptions import ConfigError, DataIOError
from autonorm.models import FeatureMatrix, NaPolicy, Orientation, RunConfig
from autonorm.services.normality.dataio import write_matrix
from autonorm.services.normality_service import NormalityService


def build_service():
    return NormalityService()


def build_input(tmp_path, n=50, seed=1, orientation=Orientation.FEATURES_AS_COLUMNS):
    rng = np.random.default_rng(seed)
    matrix = FeatureMatrix.from_rows(
        ["income", "flat", "noise"],
        [rng.lognormal(size=n), np.full(n, 3.0), rng.normal(size=n)],
        orientation=orientation,
    )
    path = tmp_path / "input.csv"
    write_matrix(matrix, path)
    return path


def test_run_transform_writes_outputs_and_reports_each_feature(tmp_path):
    source = build_input(tmp_path)
    run = RunConfig(input_path=source, output_path=tmp_path / "out.csv", report_path=tmp_path / "report.json")
    result = build_service().run_transform(run)

    assert result.after.names == ["income", "flat", "noise"]
    assert [report.feature_name for report in result.reports] == ["income", "flat", "noise"]
    flat = result.reports[1]
    assert flat.degenerate and flat.chosen_beta == 0.0
    assert np.array_equal(result.after.feature("flat").values, np.zeros(50))
    assert result.diagnostic_files == []

    document = json.loads((tmp_path / "report.json").read_text())
    assert document["config"]["orientation"] == "cols"
    assert document["config"]["seed"] == 0
    assert (tmp_path / "out.csv").read_text().startswith("income,flat,noise\n")


def test_run_transform_rows_orientation(tmp_path):
    source = build_input(tmp_path, orientation=Orientation.FEATURES_AS_ROWS)
    run = RunConfig(
        input_path=source,
        output_path=tmp_path / "out.csv",
        orientation=Orientation.FEATURES_AS_ROWS,
    )
    result = build_service().run_transform(run)
    assert result.before.n_objects == 50
    lines = (tmp_path / "out.csv").read_text().splitlines()
    assert lines[0].startswith(",0,1,")
    assert lines[1].startswith("income,")
    assert result.after.names == ["income", "flat", "noise"]


def test_run_transform_without_output_paths_only_computes(tmp_path):
    source = build_input(tmp_path)
    result = build_service().run_transform(RunConfig(input_path=source))
    assert len(result.reports) == 3
    assert sorted(path.name for path in tmp_path.iterdir()) == ["input.csv"]


def test_run_transform_missing_input_raises_io_error(tmp_path):
    with pytest.raises(DataIOError):
        build_service().run_transform(RunConfig(input_path=tmp_path / "missing.csv"))


def test_diagnostics_skip_degenerate_features(tmp_path):
    source = build_input(tmp_path)
    plots = tmp_path / "plots"
    run = RunConfig(input_path=source, diagnostics_dir=plots, qq_points=10)
    result = build_service().run_transform(run)
    names = sorted(path.name for path in result.diagnostic_files)
    assert len(names) == 8
    assert not any(name.startswith("flat_") for name in names)
    assert "income_kde_before.svg" in names


def test_unknown_scatter_feature_fails_before_any_output(tmp_path):
    source = build_input(tmp_path)
    run = RunConfig(
        input_path=source,
        output_path=tmp_path / "out.csv",
        diagnostics_dir=tmp_path / "plots",
        scatter=("income", "missing"),
    )
    with pytest.raises(ConfigError):
        build_service().run_transform(run)
    assert not (tmp_path / "out.csv").exists()


def test_missing_cells_are_dropped_per_feature(tmp_path):
    source = tmp_path / "input.csv"
    rng = np.random.default_rng(2)
    values = rng.lognormal(size=30)
    rows = ["a,b"] + [f"{repr(float(v))},{'' if i == 4 else repr(float(v * 2))}" for i, v in enumerate(values)]
    source.write_text("\n".join(rows) + "\n")
    run = RunConfig(input_path=source, output_path=tmp_path / "out.csv", na_policy=NaPolicy.DROP)
    result = build_service().run_transform(run)
    assert [report.n for report in result.reports] == [30, 29]
    assert np.isnan(result.after.feature("b").values[4])
    assert (tmp_path / "out.csv").read_text().splitlines()[5].endswith(",")


def test_service_dependency_is_cached_until_cleared():
    clear_dependency_caches()
    first = get_service()
    assert get_service() is first
    assert not hasattr(first, "settings")
    clear_dependency_caches()
    assert get_service() is not first
