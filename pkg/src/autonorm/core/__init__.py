from autonorm.core.config import Settings, get_settings, parse_beta_grid
from autonorm.core.exceptions import (
    AppValidationError,
    ConfigError,
    DataIOError,
    DegenerateInputError,
    DomainError,
    ParseError,
)
from autonorm.core.logging import configure_logging

__all__ = [
    "Settings",
    "get_settings",
    "parse_beta_grid",
    "AppValidationError",
    "ConfigError",
    "DataIOError",
    "DegenerateInputError",
    "DomainError",
    "ParseError",
    "configure_logging",
]
