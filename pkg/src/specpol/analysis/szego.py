"""Clustering of Spec2 at +-1 for the model symbol."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..engine import SecondOrderSpectrum, second_order_spectrum
from ..operators import PiecewiseSymbol, assemble_multiplication, fourier_coefficient
from ..utils.constants import SZEGO_EPSILON


@dataclass(frozen=True)
class ClusterStats:
    """Fractions of Spec2 pairs whose Joukowski image lies within epsilon of -1 or 1."""

    n: int
    epsilon: float
    frac_near_minus1: float
    frac_near_plus1: float
    expected_minus: float
    expected_plus: float
    mean: complex
    expected_mean: float


def joukowski(z: np.ndarray) -> np.ndarray:
    """w = (z + 1/z) / 2."""
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z == 0):
        raise ValueError("The Joukowski map is undefined at z = 0")
    return 0.5 * (z + 1.0 / z)


def _check_model_symbol(symbol: PiecewiseSymbol) -> None:
    if not set(symbol.values) <= {-1.0, 1.0}:
        raise ValueError(f"Clustering statistics need a +-1 symbol, got values {symbol.values}")


def szego_stats(
    symbol: PiecewiseSymbol,
    n: int,
    epsilon: float = SZEGO_EPSILON,
    spectrum: Optional[SecondOrderSpectrum] = None,
) -> ClusterStats:
    """
    Count Spec2 pairs whose image w = (z + 1/z)/2 lies in [-1, -1+eps] or [1-eps, 1].

    Both fractions tend to the measure of the level sets {m = -1} and {m = 1}
    over 2 pi as n grows. The mean of Spec2 equals the zeroth Fourier
    coefficient of m at every n.

    Args:
        symbol: A symbol with values in {-1, 1}
        n: Truncation parameter
        epsilon: Window width, in (0, 1)
        spectrum: Precomputed Spec2 of the pure multiplication operator
    """
    _check_model_symbol(symbol)
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if spectrum is None:
        spectrum = second_order_spectrum(assemble_multiplication(symbol, n))

    w = joukowski(spectrum.upper).real
    count = max(len(w), 1)
    total = 2 * np.pi
    return ClusterStats(
        n=n,
        epsilon=float(epsilon),
        frac_near_minus1=float(np.count_nonzero(w <= -1 + epsilon)) / count,
        frac_near_plus1=float(np.count_nonzero(w >= 1 - epsilon)) / count,
        expected_minus=symbol.measure_of(-1.0) / total,
        expected_plus=symbol.measure_of(1.0) / total,
        mean=spectrum.mean,
        expected_mean=fourier_coefficient(symbol, 0).real,
    )
