from __future__ import annotations

from pydantic import BaseModel, Field


class FeatureReport(BaseModel):
    feature_name: str
    chosen_beta: float
    ad_before: float | None
    ad_after: float | None
    skewness_before: float | None
    skewness_after: float | None
    winsorised_count: int = Field(ge=0)
    threshold_L: float | None
    degenerate: bool
    n: int = Field(ge=0)
    short_sample: bool = False


class ConfigEcho(BaseModel):
    beta_grid: list[float]
    winsorise: bool
    gumbel_percentile: float
    restrict_by_skewness: bool
    min_length: int
    std_divisor: str = "n-1"
    median_convention: str = "midpoint"
    log_base: str = "e"
    qq_plotting_position: str = "hazen"
    bandwidth_rule: str = "silverman"
    orientation: str | None = None
    delimiter: str | None = None
    header: bool | None = None
    na_policy: str | None = None
    seed: int | None = None
    qq_points: int | None = None


class TransformReport(BaseModel):
    config: ConfigEcho
    features: list[FeatureReport]
