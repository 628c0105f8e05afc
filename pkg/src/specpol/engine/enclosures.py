"""Enclosure intervals certified by Spec2 points."""

from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from .spectrum import SecondOrderSpectrum


@dataclass(frozen=True)
class Enclosure:
    """
    The interval [Re z - |Im z|, Re z + |Im z|] for a point z of Spec2.

    Every such interval meets the spectrum of the operator.
    """

    lo: float
    hi: float
    source: complex

    @classmethod
    def from_point(cls, z: complex) -> "Enclosure":
        z = complex(z)
        radius = abs(z.imag)
        return cls(lo=z.real - radius, hi=z.real + radius, source=z)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.hi - self.lo)

    @property
    def center(self) -> float:
        return self.source.real

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol

    def meets(self, values: Iterable[float], tol: float = 0.0) -> bool:
        """Whether the interval contains at least one of `values`."""
        return any(self.contains(v, tol) for v in values)

    def __str__(self) -> str:
        return f"[{self.lo:.8f}, {self.hi:.8f}]"


def enclosures(
    s: SecondOrderSpectrum, max_half_width: Optional[float] = None
) -> List[Enclosure]:
    """
    One enclosure per conjugate pair of Spec2.

    Args:
        s: Second order spectrum
        max_half_width: Keep only intervals with half-width up to this value

    Returns:
        Enclosures sorted by lower endpoint
    """
    found = [Enclosure.from_point(z) for z in s.upper]
    if max_half_width is not None:
        found = [e for e in found if e.half_width <= max_half_width]
    return sorted(found, key=lambda e: (e.lo, e.hi))


def closest_point(s: SecondOrderSpectrum, lam: float) -> complex:
    """The upper half-plane point of Spec2 nearest to lam (first one on ties)."""
    if s.d == 0:
        raise ValueError("Spec2 is empty")
    return complex(s.upper[int(np.argmin(np.abs(s.upper - lam)))])
