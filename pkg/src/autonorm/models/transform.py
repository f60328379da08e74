from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

# |beta| values of the default grid; small |beta| means a large shift (close to identity).
DEFAULT_BETA_MAGNITUDES: tuple[float, ...] = (0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0)


def symmetric_grid(magnitudes: tuple[float, ...] = DEFAULT_BETA_MAGNITUDES) -> tuple[float, ...]:
    positive = sorted(set(magnitudes))
    return tuple([-value for value in reversed(positive)] + [0.0] + positive)


def validate_beta_grid(value: tuple[float, ...]) -> tuple[float, ...]:
    if any(not math.isfinite(beta) for beta in value):
        raise ValueError("Beta grid entries must be finite.")
    if sum(1 for beta in value if beta == 0.0) != 1:
        raise ValueError("Beta grid must contain 0 exactly once.")
    if len(set(value)) != len(value):
        raise ValueError("Beta grid entries must be distinct.")
    return value


class TransformConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    beta_grid: tuple[float, ...] = Field(default_factory=symmetric_grid)
    winsorise: bool = True
    gumbel_percentile: float = Field(default=0.95, gt=0.0, lt=1.0)
    restrict_by_skewness: bool = False
    min_length: int = Field(default=8, ge=1)

    @field_validator("beta_grid")
    @classmethod
    def _validate_grid(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        return validate_beta_grid(value)


class TransformOutcome(BaseModel):
    """Result of the transform/standardize/winsorise/score pipeline at one beta."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    beta: float
    transformed: np.ndarray
    ad_stat: float
    winsorised_count: int = Field(ge=0)
    threshold: float | None = None
    degenerate: bool = False
