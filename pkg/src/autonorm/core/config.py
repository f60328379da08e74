from __future__ import annotations

import os
import re
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from pathlib import Path

from autonorm.core.exceptions import ConfigError


@dataclass(frozen=True)
class Settings:
    beta_grid: tuple[float, ...] | None = None
    winsorise: bool = True
    gumbel_percentile: float = 0.95
    restrict_by_skewness: bool = False
    min_length: int = 8
    delimiter: str | None = None
    orientation: str = "cols"
    header: bool = True
    na_policy: str = "error"
    seed: int = 0
    threads: int = 1
    qq_points: int = 1000
    kde_points: int = 512
    log_level: str = "WARNING"


_GRID_SPLIT = re.compile(r"[,\s;]+")


def _strip_wrapping_quotes(value: str) -> str:
    if len(value) >= 2 and value[0] == value[-1] and value[0] in {"'", '"'}:
        return value[1:-1]
    return value


def _parse_bool(name: str, value: str) -> bool:
    normalized = value.strip().lower()
    if normalized in {"1", "true", "yes", "on"}:
        return True
    if normalized in {"0", "false", "no", "off"}:
        return False
    raise ConfigError(f"{name} must be a boolean (true/false), got '{value}'.")


def parse_beta_grid(raw: str) -> tuple[float, ...]:
    tokens = [token for token in _GRID_SPLIT.split(raw.strip()) if token]
    if not tokens:
        raise ConfigError("Beta grid is empty.")
    try:
        return tuple(float(token) for token in tokens)
    except ValueError as exc:
        raise ConfigError(f"Beta grid contains a non-numeric entry: {raw!r}") from exc


def _read_key_values(config_path: Path) -> dict[str, str]:
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot read config file '{config_path}': {exc}") from exc

    values: dict[str, str] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{config_path}:{line_number}: expected KEY=value, got '{line}'.")
        key, value = line.split("=", 1)
        key = key.strip().upper()
        if key:
            values[key] = _strip_wrapping_quotes(value.strip())
    return values


def _coerce(key: str, value: str) -> object:
    try:
        if key == "BETA_GRID":
            return parse_beta_grid(value)
        if key in {"WINSORISE", "RESTRICT_BY_SKEWNESS", "HEADER"}:
            return _parse_bool(key, value)
        if key == "GUMBEL_PERCENTILE":
            return float(value)
        if key in {"MIN_LENGTH", "SEED", "THREADS", "QQ_POINTS", "KDE_POINTS"}:
            return int(value)
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"{key} has an invalid value '{value}'.") from exc
    if key == "DELIMITER":
        return "\t" if value.lower() in {"tab", "\\t"} else value
    return value


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def get_settings(config_path: str | None = None) -> Settings:
    settings = Settings(threads=_default_threads())
    if config_path is None:
        return settings

    known = {field.name.upper(): field.name for field in fields(Settings)}
    overrides: dict[str, object] = {}
    for key, value in _read_key_values(Path(config_path)).items():
        if key not in known:
            raise ConfigError(f"Unknown config key '{key}' in {config_path}.")
        overrides[known[key]] = _coerce(key, value)
    return replace(settings, **overrides)


get_settings = lru_cache(maxsize=8)(get_settings)


def clear_settings_cache() -> None:
    get_settings.cache_clear()  # type: ignore[attr-defined]
