from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Callable, TypeVar

from pydantic import ValidationError

from autonorm.core.config import Settings, parse_beta_grid
from autonorm.core.exceptions import (
    AppValidationError,
    ConfigError,
    DataIOError,
    DegenerateInputError,
    DomainError,
    ParseError,
)
from autonorm.models import FeatureReport, RunConfig

T = TypeVar("T")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_PARSE = 3
EXIT_IO = 4
EXIT_DOMAIN = 5

EXIT_CODE_DESCRIPTIONS = {
    EXIT_OK: "Success.",
    EXIT_INTERNAL: "Unexpected internal failure.",
    EXIT_CONFIG: "Invalid command line or configuration (bad grid, percentile, scatter names).",
    EXIT_PARSE: "Input table could not be parsed (non-numeric cell, ragged rows, empty table).",
    EXIT_IO: "Input or output file could not be read or written.",
    EXIT_DOMAIN: "An argument fell outside the domain of a statistic.",
}


class CommandFailed(Exception):
    def __init__(self, exit_code: int, detail: str) -> None:
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


def parse_grid_option(raw: str) -> tuple[float, ...]:
    """Inline comma list, or a path to a file of numbers separated by commas/whitespace."""
    candidate = Path(raw)
    if candidate.is_file():
        try:
            return parse_beta_grid(candidate.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"Cannot read grid file '{candidate}': {exc}") from exc
    return parse_beta_grid(raw)


def parse_scatter_option(raw: str) -> tuple[str, str]:
    parts = [part.strip() for part in raw.split(",")]
    if len(parts) != 2 or not all(parts):
        raise ConfigError(f"--scatter expects two feature names separated by a comma, got '{raw}'.")
    return parts[0], parts[1]


def parse_delimiter_option(raw: str | None) -> str | None:
    if raw is None:
        return None
    if raw.lower() in {"tab", "\\t"}:
        return "\t"
    return raw


def _pick(value: Any, fallback: Any) -> Any:
    return fallback if value is None else value


def build_run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    grid = parse_grid_option(args.grid) if args.grid is not None else settings.beta_grid
    scatter = parse_scatter_option(args.scatter) if args.scatter else None
    payload: dict[str, Any] = {
        "input_path": args.input,
        "output_path": args.output,
        "report_path": args.report,
        "orientation": _pick(args.orient, settings.orientation),
        "delimiter": _pick(parse_delimiter_option(args.delimiter), settings.delimiter),
        "header": _pick(args.header, settings.header),
        "winsorise": _pick(args.winsorise, settings.winsorise),
        "gumbel_percentile": _pick(args.percentile, settings.gumbel_percentile),
        "restrict_by_skewness": _pick(args.restrict_by_skewness, settings.restrict_by_skewness),
        "min_length": _pick(args.min_length, settings.min_length),
        "na_policy": _pick(args.na, settings.na_policy),
        "seed": _pick(args.seed, settings.seed),
        "threads": _pick(args.threads, settings.threads),
        "qq_points": _pick(args.qq_points, settings.qq_points),
        "kde_points": _pick(args.kde_points, settings.kde_points),
        "diagnostics_dir": args.diagnostics_dir,
        "scatter": scatter,
    }
    if grid is not None:
        payload["beta_grid"] = grid
    try:
        return RunConfig(**payload)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}" for error in exc.errors()
        )
        raise ConfigError(f"Invalid run configuration: {problems}") from exc
    except ValueError as exc:
        raise ConfigError(f"Invalid run configuration: {exc}") from exc


def format_summary_line(report: FeatureReport) -> str:
    def _fmt(value: float | None) -> str:
        return "n/a" if value is None else f"{value:.6g}"

    flags = []
    if report.degenerate:
        flags.append("degenerate")
    if report.short_sample:
        flags.append("short-sample")
    suffix = f" [{', '.join(flags)}]" if flags else ""
    return (
        f"{report.feature_name}\tbeta={report.chosen_beta:g}\t"
        f"AD {_fmt(report.ad_before)} -> {_fmt(report.ad_after)}{suffix}"
    )


def call_service_or_exit(
    call: Callable[[], T],
    *,
    logger: logging.Logger,
    command: str,
    context: dict[str, Any] | None = None,
) -> T:
    context_text = ""
    if context:
        context_text = " " + " ".join(f"{key}={value}" for key, value in context.items())
    try:
        return call()
    except ConfigError as exc:
        raise CommandFailed(EXIT_CONFIG, str(exc)) from exc
    except ParseError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from exc
    except (DomainError, DegenerateInputError) as exc:
        raise CommandFailed(EXIT_DOMAIN, str(exc)) from exc
    except (AppValidationError, ValueError) as exc:
        raise CommandFailed(EXIT_CONFIG, str(exc)) from exc
    except DataIOError as exc:
        logger.warning("File failure on %s command%s: detail=%s", command, context_text, str(exc))
        raise CommandFailed(EXIT_IO, str(exc)) from exc
    except Exception as exc:  # noqa: BLE001
        logger.exception("Unexpected failure on %s command%s", command, context_text)
        raise CommandFailed(EXIT_INTERNAL, f"Unexpected error: {exc}") from exc
