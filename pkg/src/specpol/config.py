"""Runtime settings for a specpol command."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional


@dataclass
class RunConfig:
    """Settings of a single CLI invocation, separate from the experiment itself."""

    # Experiment
    config_path: Optional[Path] = None  # YAML experiment file
    preset: Optional[str] = None  # bundled preset name, used when config_path is None
    n_override: Optional[int] = None  # replaces n_list with [n]

    # Output
    out: Optional[Path] = None  # None writes to stdout
    format: Optional[str] = None  # overrides output.format from the experiment

    # UI settings
    quiet: bool = False  # skip the rich summary on stderr

    # Logging settings
    log_file: Optional[Path] = None  # Path to log file (JSON format)
    log_console: bool = False  # Log events to console (text format)

    @classmethod
    def default(cls) -> "RunConfig":
        """Get default configuration."""
        return cls()
