class AppValidationError(ValueError):
    """Raised when user input or domain constraints are invalid."""


class ConfigError(AppValidationError):
    """Raised when a run configuration is rejected before any processing."""


class DomainError(AppValidationError):
    """Raised when an argument lies outside the domain of a function."""


class DegenerateInputError(AppValidationError):
    """Raised when a statistic is undefined because the input has no spread."""


class ParseError(AppValidationError):
    """Raised when a delimited-text table cannot be turned into a numeric matrix."""


class DataIOError(RuntimeError):
    """Raised when an input or output file cannot be read or written."""
