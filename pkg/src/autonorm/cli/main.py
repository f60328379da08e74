from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from autonorm import __version__
from autonorm.cli.command_utils import EXIT_CODE_DESCRIPTIONS, EXIT_CONFIG, CommandFailed
from autonorm.cli.commands import COMMAND_MODULES
from autonorm.core.config import get_settings
from autonorm.core.exceptions import ConfigError
from autonorm.core.logging import configure_logging

logger = logging.getLogger(__name__)


def _exit_code_epilog() -> str:
    lines = ["exit codes:"]
    lines.extend(f"  {code}  {text}" for code, text in sorted(EXIT_CODE_DESCRIPTIONS.items()))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autonorm",
        description="Automatic shifted-logarithm transformation of features toward normality.",
        epilog=_exit_code_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="Flat KEY=value file with run defaults.")
    parser.add_argument("--log-level", help="CRITICAL, ERROR, WARNING, INFO or DEBUG (default WARNING).")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="{transform,diagnose}")
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = get_settings(args.config)
    except ConfigError as exc:
        configure_logging(args.log_level)
        print(f"autonorm: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    configure_logging(args.log_level or settings.log_level)

    try:
        return args.handler(args, settings)
    except CommandFailed as exc:
        print(f"autonorm {args.command}: error: {exc.detail}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
