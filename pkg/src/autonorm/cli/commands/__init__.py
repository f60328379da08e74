from autonorm.cli.commands import diagnose, transform

COMMAND_MODULES = (transform, diagnose)

__all__ = ["COMMAND_MODULES", "diagnose", "transform"]
