import logging

_CONFIGURED = False
_LEVELS = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}


def _resolve_log_level(raw: str | None) -> int:
    normalized = (raw or "WARNING").strip().upper()
    if normalized in _LEVELS:
        return getattr(logging, normalized, logging.WARNING)
    return logging.WARNING


def configure_logging(level: str | None = None) -> None:
    global _CONFIGURED
    resolved = _resolve_log_level(level)
    if _CONFIGURED:
        logging.getLogger().setLevel(resolved)
        return

    logging.basicConfig(
        level=resolved,
        format="%(asctime)s %(levelname)s [%(name)s] %(message)s",
    )
    logging.getLogger("matplotlib").setLevel(logging.WARNING)
    logging.getLogger("PIL").setLevel(logging.WARNING)
    _CONFIGURED = True
