"""Exception types raised by specpol."""

from dataclasses import dataclass
from typing import List, Optional


class SpecpolError(Exception):
    """Base class for all specpol errors."""


@dataclass(frozen=True)
class Diagnostic:
    """A single configuration problem, located by field path and (optionally) line."""

    field: str
    message: str
    line: Optional[int] = None

    def __str__(self) -> str:
        where = self.field
        if self.line is not None:
            where = f"line {self.line}: {where}"
        return f"{where}: {self.message}"


class ConfigError(SpecpolError, ValueError):
    """Experiment configuration could not be parsed or failed validation."""

    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class AssemblyError(SpecpolError, ValueError):
    """Moment matrices cannot be assembled exactly for the requested window."""


class ResolventError(SpecpolError, ValueError):
    """A resolvent was requested at a point of the essential spectrum."""


class NumericalError(SpecpolError, RuntimeError):
    """A numerical routine failed for a given operator and truncation."""

    def __init__(self, message: str, label: str = "", d: Optional[int] = None, n=None):
        self.label = label
        self.d = d
        self.n = n
        context = []
        if label:
            context.append(f"operator={label}")
        if n is not None:
            context.append(f"n={n}")
        if d is not None:
            context.append(f"d={d}")
        suffix = f" [{', '.join(context)}]" if context else ""
        super().__init__(f"{message}{suffix}")


class SolverError(NumericalError):
    """Dense eigen- or singular-value solver did not converge."""


class PairingError(NumericalError):
    """Computed second order spectrum is not closed under conjugation."""


class NoZeroFoundError(NumericalError):
    """Descent on sigma stopped without reaching the tolerance."""

    def __init__(self, message: str, z: complex, value: float, label: str = "", d=None):
        self.z = z
        self.value = value
        super().__init__(message, label=label, d=d)
