from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class PlotKind(str, Enum):
    KDE = "kde"
    QQ = "qq"
    SCATTER = "scatter"
    JITTER = "jitter"


class PlotSeries(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: PlotKind
    x: np.ndarray
    y: np.ndarray
    label: str = ""

    @field_validator("x", "y", mode="before")
    @classmethod
    def _as_vector(cls, value: object) -> np.ndarray:
        array = np.array(value, dtype=np.float64).reshape(-1)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _validate_points(self) -> "PlotSeries":
        if len(self.x) != len(self.y):
            raise ValueError("Series x and y must have the same length.")
        if self.kind == PlotKind.KDE:
            if np.any(self.y < 0):
                raise ValueError("Density values must be nonnegative.")
            if np.any(np.diff(self.x) <= 0):
                raise ValueError("Density grid must be strictly increasing.")
        if self.kind == PlotKind.QQ:
            if np.any(np.diff(self.x) < 0) or np.any(np.diff(self.y) < 0):
                raise ValueError("Quantile pairs must be nondecreasing in both coordinates.")
        return self

    @property
    def points(self) -> list[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.x, self.y)]


class RenderOptions(BaseModel):
    title: str = ""
    x_label: str = ""
    y_label: str = ""
    width_in: float = 6.0
    height_in: float = 4.5
