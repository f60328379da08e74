from __future__ import annotations

import argparse
from pathlib import Path


def add_run_arguments(parser: argparse.ArgumentParser, *, require_output: bool, require_diagnostics: bool) -> None:
    io = parser.add_argument_group("input/output")
    io.add_argument("--input", type=Path, required=True, help="Delimited-text matrix to transform.")
    io.add_argument("--output", type=Path, required=require_output, help="Where to write the transformed matrix.")
    io.add_argument("--report", type=Path, help="Where to write the JSON report (default: <output>.report.json).")
    io.add_argument("--orient", choices=["rows", "cols"], help="Features stored as rows or as columns (default: cols).")
    io.add_argument("--delimiter", help="Cell delimiter; 'tab' for tabs (default: tab for .tsv, comma otherwise).")
    io.add_argument(
        "--header",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="First row is a header; with --orient rows a blank corner cell marks a name column. Default: on.",
    )
    io.add_argument("--na", choices=["error", "drop"], help="Non-numeric cells: fail, or drop per feature.")

    search = parser.add_argument_group("search")
    search.add_argument("--grid", help="Beta grid: comma list (must include 0) or a file of numbers.")
    search.add_argument(
        "--no-winsorise",
        dest="winsorise",
        action="store_const",
        const=False,
        default=None,
        help="Skip the extreme-value winsorisation step.",
    )
    search.add_argument("--percentile", type=float, help="Gumbel percentile for the winsorisation level (default 0.95).")
    search.add_argument(
        "--restrict-by-skewness",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Only search betas whose sign matches the sample skewness.",
    )
    search.add_argument("--min-length", type=int, help="Features shorter than this pass through at beta=0 (default 8).")
    search.add_argument("--threads", type=int, help="Worker threads for per-feature selection.")

    diagnostics = parser.add_argument_group("diagnostics")
    diagnostics.add_argument(
        "--diagnostics-dir",
        type=Path,
        required=require_diagnostics,
        help="Directory for before/after KDE and QQ SVGs with CSV sidecars.",
    )
    diagnostics.add_argument("--scatter", help="Two feature names 'A,B' for a before/after scatter pair.")
    diagnostics.add_argument("--seed", type=int, help="Seed for QQ subsampling.")
    diagnostics.add_argument("--qq-points", type=int, help="QQ subsample size (default 1000, capped at n).")
    diagnostics.add_argument("--kde-points", type=int, help="Density evaluation points (default 512).")
