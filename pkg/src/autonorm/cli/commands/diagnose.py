from __future__ import annotations

import argparse
import logging
import sys

from autonorm.cli.command_utils import (
    EXIT_OK,
    build_run_config,
    call_service_or_exit,
    format_summary_line,
)
from autonorm.cli.commands.options import add_run_arguments
from autonorm.cli.dependencies import get_service
from autonorm.core.config import Settings

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "diagnose",
        help="Run the transform and emit before/after KDE, QQ and scatter SVGs.",
        description=(
            "Runs the transform, then writes per-feature KDE and QQ plots before and after transformation, "
            "plus an optional scatter pair, each with a CSV sidecar of the plotted points."
        ),
    )
    add_run_arguments(parser, require_output=False, require_diagnostics=True)
    parser.set_defaults(handler=cmd_diagnose)


def cmd_diagnose(args: argparse.Namespace, settings: Settings) -> int:
    run = call_service_or_exit(
        lambda: build_run_config(args, settings),
        logger=logger,
        command="diagnose",
    )
    service = get_service()
    result = call_service_or_exit(
        lambda: service.run_transform(run),
        logger=logger,
        command="diagnose",
        context={"input": run.input_path, "diagnostics_dir": run.diagnostics_dir},
    )
    for report in result.reports:
        print(format_summary_line(report), file=sys.stdout)
    print(f"wrote {len(result.diagnostic_files)} diagnostic plots to {run.diagnostics_dir}", file=sys.stdout)
    return EXIT_OK
