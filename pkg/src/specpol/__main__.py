"""
Main entry point for the specpol CLI.

Run with: python -m specpol <subcommand> --config experiment.yaml
"""

import argparse
import sys
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from .cli import SUBCOMMANDS, run
from .config import RunConfig
from .experiments import available_presets


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specpol",
        description="specpol - second order spectra and pollution-free eigenvalue enclosures",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument("subcommand", choices=SUBCOMMANDS, help="What to compute")

    source = parser.add_mutually_exclusive_group()
    source.add_argument("--config", type=Path, help="Path to an experiment YAML file")
    source.add_argument(
        "--preset", choices=available_presets(), help="Use a bundled experiment instead"
    )

    parser.add_argument("--out", type=Path, help="Write results here instead of stdout")
    parser.add_argument("--format", choices=("csv", "json"), help="Override output.format")
    parser.add_argument("--n", type=int, help="Run a single truncation n instead of n_list")
    parser.add_argument("--quiet", action="store_true", help="Skip the summary table on stderr")

    parser.add_argument(
        "--log-file",
        nargs="?",
        const="auto",
        type=str,
        help="Log run events to file in JSON format (auto-generates filename if no path provided)",
    )
    parser.add_argument(
        "--log-console", action="store_true", help="Log run events to stderr in text format"
    )
    return parser


def resolve_log_file(value: Optional[str], subcommand: str) -> Optional[Path]:
    """Turn --log-file into a path; 'auto' names it logs/<subcommand>_<timestamp>.jsonl."""
    if not value:
        return None
    if value != "auto":
        return Path(value)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return Path("logs") / f"{subcommand}_{timestamp}.jsonl"


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)

    config = RunConfig(
        config_path=args.config,
        preset=args.preset,
        n_override=args.n,
        out=args.out,
        format=args.format,
        quiet=args.quiet,
        log_file=resolve_log_file(args.log_file, args.subcommand),
        log_console=args.log_console,
    )
    return run(args.subcommand, config)


if __name__ == "__main__":
    sys.exit(main())
