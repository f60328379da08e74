from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Orientation(str, Enum):
    FEATURES_AS_ROWS = "rows"
    FEATURES_AS_COLUMNS = "cols"


class NaPolicy(str, Enum):
    ERROR = "error"
    DROP = "drop"


class FeatureVector(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _as_readonly_vector(cls, value: object) -> np.ndarray:
        array = np.array(value, dtype=np.float64)
        if array.ndim != 1:
            raise ValueError("Feature values must be a one-dimensional sequence.")
        array.setflags(write=False)
        return array

    @property
    def finite_mask(self) -> np.ndarray:
        return np.isfinite(self.values)


def unique_feature_names(names: list[str]) -> list[str]:
    """Fill blank names with positional defaults and suffix duplicates (`a`, `a_1`, ...)."""
    seen: set[str] = set()
    resolved: list[str] = []
    for index, raw in enumerate(names):
        base = raw.strip() or f"f{index}"
        candidate = base
        suffix = 1
        while candidate in seen:
            candidate = f"{base}_{suffix}"
            suffix += 1
        seen.add(candidate)
        resolved.append(candidate)
    return resolved


class FeatureMatrix(BaseModel):
    """Named features stored as rows, whatever the orientation of the source table."""

    model_config = ConfigDict(frozen=True)

    features: list[FeatureVector]
    orientation: Orientation = Orientation.FEATURES_AS_ROWS

    @model_validator(mode="after")
    def _validate_shape(self) -> "FeatureMatrix":
        if not self.features:
            raise ValueError("A feature matrix needs at least one feature.")
        lengths = {len(feature.values) for feature in self.features}
        if len(lengths) != 1:
            raise ValueError(f"All features must share one length, got lengths {sorted(lengths)}.")
        if 0 in lengths:
            raise ValueError("Features must hold at least one value.")
        names = [feature.name for feature in self.features]
        if len(set(names)) != len(names):
            raise ValueError("Feature names must be unique.")
        return self

    @classmethod
    def from_rows(
        cls,
        names: list[str],
        rows: list[np.ndarray] | np.ndarray,
        orientation: Orientation = Orientation.FEATURES_AS_ROWS,
    ) -> "FeatureMatrix":
        resolved = unique_feature_names(list(names))
        return cls(
            features=[FeatureVector(name=name, values=row) for name, row in zip(resolved, rows, strict=True)],
            orientation=orientation,
        )

    @property
    def n_objects(self) -> int:
        return len(self.features[0].values)

    @property
    def names(self) -> list[str]:
        return [feature.name for feature in self.features]

    def feature(self, name: str) -> FeatureVector:
        for item in self.features:
            if item.name == name:
                return item
        raise KeyError(name)

    def as_array(self) -> np.ndarray:
        return np.vstack([feature.values for feature in self.features])


class MatrixFormat(BaseModel):
    delimiter: str | None = Field(default=None, description="Cell delimiter. None selects tab for .tsv, comma otherwise.")
    orientation: Orientation = Field(default=Orientation.FEATURES_AS_COLUMNS)
    header: bool = Field(
        default=True,
        description="First row is a header. Rows orientation takes names from the first column when the corner cell is blank.",
    )
    na_policy: NaPolicy = Field(default=NaPolicy.ERROR)

    @field_validator("delimiter")
    @classmethod
    def _single_character(cls, value: str | None) -> str | None:
        if value is not None and len(value) != 1:
            raise ValueError("Delimiter must be a single character.")
        return value
