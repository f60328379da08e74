from __future__ import annotations

import csv
import logging
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from autonorm.core.exceptions import AppValidationError, DataIOError
from autonorm.models import PlotKind, PlotSeries, RenderOptions

logger = logging.getLogger(__name__)

# Fixed salt and no timestamp keep SVG bytes identical across runs.
_SVG_RC = {"svg.hashsalt": "autonorm", "svg.fonttype": "path", "path.simplify": False}
_SVG_METADATA = {"Date": None}

_SERIES_STYLE = {
    PlotKind.KDE: {"color": "tab:blue", "linewidth": 1.5},
    PlotKind.QQ: {"color": "tab:blue", "marker": "+", "linestyle": "none", "markersize": 5},
    PlotKind.SCATTER: {"color": "tab:blue", "marker": ".", "linestyle": "none", "markersize": 3},
    PlotKind.JITTER: {"color": "tab:green", "marker": ".", "linestyle": "none", "markersize": 2},
}


def sidecar_path(path: Path) -> Path:
    return path.with_suffix(".csv")


def _jitter_band(series: list[PlotSeries]) -> tuple[float, float]:
    """Vertical band under the density curves where jitter strips are drawn."""
    peak = max((float(np.max(item.y)) for item in series if item.kind == PlotKind.KDE and item.y.size), default=1.0)
    return -0.25 * peak, -0.02 * peak


def _draw(figure: Figure, series: list[PlotSeries], options: RenderOptions) -> None:
    axes = figure.add_subplot(1, 1, 1)
    band_low, band_high = _jitter_band(series)
    for index, item in enumerate(series):
        style = _SERIES_STYLE[item.kind]
        y = item.y
        if item.kind == PlotKind.JITTER:
            y = band_low + (band_high - band_low) * item.y
        (line,) = axes.plot(item.x, y, label=item.label or item.kind.value, **style)
        line.set_gid(f"series-{index}-{item.kind.value}")

    qq = [item for item in series if item.kind == PlotKind.QQ and item.x.size]
    if qq:
        low = min(min(float(item.x.min()), float(item.y.min())) for item in qq)
        high = max(max(float(item.x.max()), float(item.y.max())) for item in qq)
        (reference,) = axes.plot([low, high], [low, high], color="red", linestyle="--", linewidth=1.0)
        reference.set_gid("qq-reference")

    axes.set_title(options.title)
    axes.set_xlabel(options.x_label)
    axes.set_ylabel(options.y_label)
    if any(item.label for item in series):
        axes.legend(loc="best", fontsize="small")


def _write_sidecar(path: Path, series: list[PlotSeries]) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["series", "kind", "x", "y"])
        for index, item in enumerate(series):
            for x_value, y_value in zip(item.x, item.y):
                writer.writerow([index, item.kind.value, repr(float(x_value)), repr(float(y_value))])


def render_svg(series: list[PlotSeries], path: str | Path, options: RenderOptions | None = None) -> Path:
    """Write a standalone SVG of `series` plus a `.csv` sidecar with the raw points."""
    if not series:
        raise AppValidationError("Nothing to render: the series list is empty.")
    path = Path(path)
    options = options or RenderOptions()

    with matplotlib.rc_context(_SVG_RC):
        figure = Figure(figsize=(options.width_in, options.height_in))
        _draw(figure, series, options)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            figure.savefig(path, format="svg", metadata=_SVG_METADATA)
            _write_sidecar(sidecar_path(path), series)
        except OSError as exc:
            raise DataIOError(f"Cannot write diagnostics file '{path}': {exc}") from exc
    logger.debug("diagnostics.render path=%s series=%d", path, len(series))
    return path
