from autonorm.models.feature import (
    FeatureMatrix,
    FeatureVector,
    MatrixFormat,
    NaPolicy,
    Orientation,
    unique_feature_names,
)
from autonorm.models.plot import PlotKind, PlotSeries, RenderOptions
from autonorm.models.report import ConfigEcho, FeatureReport, TransformReport
from autonorm.models.run import RunConfig, TransformRunResult
from autonorm.models.transform import (
    DEFAULT_BETA_MAGNITUDES,
    TransformConfig,
    TransformOutcome,
    symmetric_grid,
    validate_beta_grid,
)

__all__ = [
    "ConfigEcho",
    "DEFAULT_BETA_MAGNITUDES",
    "FeatureMatrix",
    "FeatureReport",
    "FeatureVector",
    "MatrixFormat",
    "NaPolicy",
    "Orientation",
    "PlotKind",
    "PlotSeries",
    "RenderOptions",
    "RunConfig",
    "TransformConfig",
    "TransformOutcome",
    "TransformReport",
    "TransformRunResult",
    "symmetric_grid",
    "unique_feature_names",
    "validate_beta_grid",
]
