from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, field_validator, model_validator

from autonorm.models.feature import FeatureMatrix, MatrixFormat, NaPolicy, Orientation
from autonorm.models.report import ConfigEcho, FeatureReport
from autonorm.models.transform import TransformConfig, symmetric_grid, validate_beta_grid


class RunConfig(BaseModel):
    """Fully resolved configuration of one command-line run."""

    input_path: Path
    output_path: Path | None = None
    report_path: Path | None = None
    orientation: Orientation = Orientation.FEATURES_AS_COLUMNS
    delimiter: str | None = None
    header: bool = True
    beta_grid: tuple[float, ...] = Field(default_factory=symmetric_grid)
    winsorise: bool = True
    gumbel_percentile: float = Field(default=0.95, gt=0.0, lt=1.0)
    restrict_by_skewness: bool = False
    min_length: int = Field(default=8, ge=1)
    na_policy: NaPolicy = NaPolicy.ERROR
    seed: int = 0
    threads: int = Field(default=1, ge=1)
    qq_points: int = Field(default=1000, ge=2)
    kde_points: int = Field(default=512, ge=2)
    diagnostics_dir: Path | None = None
    scatter: tuple[str, str] | None = None

    @field_validator("beta_grid")
    @classmethod
    def _grid_is_valid(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        return validate_beta_grid(value)

    @model_validator(mode="after")
    def _validate_scatter(self) -> "RunConfig":
        if self.scatter is not None and self.scatter[0] == self.scatter[1]:
            raise ValueError("Scatter needs two different feature names.")
        return self

    @property
    def diagnostics_enabled(self) -> bool:
        return self.diagnostics_dir is not None

    def transform_config(self) -> TransformConfig:
        return TransformConfig(
            beta_grid=self.beta_grid,
            winsorise=self.winsorise,
            gumbel_percentile=self.gumbel_percentile,
            restrict_by_skewness=self.restrict_by_skewness,
            min_length=self.min_length,
        )

    def matrix_format(self) -> MatrixFormat:
        return MatrixFormat(
            delimiter=self.delimiter,
            orientation=self.orientation,
            header=self.header,
            na_policy=self.na_policy,
        )

    def config_echo(self) -> ConfigEcho:
        return ConfigEcho(
            beta_grid=list(self.beta_grid),
            winsorise=self.winsorise,
            gumbel_percentile=self.gumbel_percentile,
            restrict_by_skewness=self.restrict_by_skewness,
            min_length=self.min_length,
            orientation=self.orientation.value,
            delimiter=self.delimiter,
            header=self.header,
            na_policy=self.na_policy.value,
            seed=self.seed,
            qq_points=self.qq_points,
        )


class TransformRunResult(BaseModel):
    before: FeatureMatrix
    after: FeatureMatrix
    reports: list[FeatureReport]
    diagnostic_files: list[Path] = Field(default_factory=list)
