"""Scanning sigma_n along the real axis."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..engine import real_axis_minima, shifted_square_estimates, sigma_on_real_axis
from ..operators import PiecewiseSymbol, RankOneTerm
from .sweep import operator_moments


@dataclass(frozen=True)
class ScanResult:
    """The real-axis profile of sigma_n and the eigenvalue estimates at its local minima."""

    n: int
    lambdas: np.ndarray
    values: np.ndarray
    minima: List[float]
    estimates: List[Tuple[float, float]]


def real_axis_scan(
    symbol: PiecewiseSymbol,
    pert: Optional[RankOneTerm],
    n: int,
    lambdas: Sequence[float],
    window_scale: int = 1,
) -> ScanResult:
    """
    Evaluate sigma_n on real sample points and locate its dips.

    At each interior local minimum zeta the truncation of (M - zeta)^2 is
    diagonalised to bracket a nearby eigenvalue.
    """
    grid = np.asarray(lambdas, dtype=float)
    if grid.ndim != 1 or len(grid) < 3:
        raise ValueError("A real-axis scan needs at least three sample points")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("Scan points must be strictly ascending")

    m = operator_moments(symbol, pert, n, window_scale=window_scale)
    values = sigma_on_real_axis(m, grid)
    minima = [float(grid[i]) for i in real_axis_minima(values)]
    return ScanResult(
        n=n,
        lambdas=grid,
        values=values,
        minima=minima,
        estimates=[shifted_square_estimates(m, zeta) for zeta in minima],
    )
