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
        "transform",
        help="Select beta per feature, write the transformed matrix and report.",
        description=(
            "Transforms every feature toward normality by grid search over the shifted-logarithm family, "
            "choosing the beta with the smallest Anderson-Darling statistic."
        ),
    )
    add_run_arguments(parser, require_output=True, require_diagnostics=False)
    parser.set_defaults(handler=cmd_transform)


def cmd_transform(args: argparse.Namespace, settings: Settings) -> int:
    run = call_service_or_exit(
        lambda: build_run_config(args, settings),
        logger=logger,
        command="transform",
    )
    if run.report_path is None and run.output_path is not None:
        run = run.model_copy(update={"report_path": run.output_path.with_suffix(".report.json")})

    service = get_service()
    result = call_service_or_exit(
        lambda: service.run_transform(run),
        logger=logger,
        command="transform",
        context={"input": run.input_path},
    )
    for report in result.reports:
        print(format_summary_line(report), file=sys.stdout)
    return EXIT_OK
