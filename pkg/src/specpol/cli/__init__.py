"""Command line front end: subcommand dispatch and output writers."""

from .commands import (
    EXIT_CONFIG,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_UNEXPECTED,
    SUBCOMMANDS,
    CommandResult,
    CommandRunner,
    run,
)
from .writers import format_number, write_csv, write_json

__all__ = [
    "EXIT_CONFIG",
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_UNEXPECTED",
    "SUBCOMMANDS",
    "CommandResult",
    "CommandRunner",
    "format_number",
    "run",
    "write_csv",
    "write_json",
]
