"""Accumulation of Spec2 along a sequence of truncations."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from ..engine import SecondOrderSpectrum
from ..operators import (
    PiecewiseSymbol,
    RankOneTerm,
    discrete_eigenvalues_rank_one,
    two_point_circle,
)
from ..utils.constants import CIRCLE_SAMPLES, OFFAXIS_IM_CUT
from .sweep import check_n_list, spectrum_sweep


def circle_samples(center: float, radius: float, count: int = CIRCLE_SAMPLES) -> np.ndarray:
    """count equally spaced points on |z - center| = radius, starting at angle 0."""
    theta = 2 * np.pi * np.arange(count) / count
    return center + radius * np.exp(1j * theta)


def one_sided_distance(targets: np.ndarray, cloud: np.ndarray) -> float:
    """max over targets of the distance to the nearest cloud point."""
    if len(targets) == 0:
        return 0.0
    if len(cloud) == 0:
        return float("inf")
    t = np.column_stack([targets.real, targets.imag])
    c = np.column_stack([cloud.real, cloud.imag])
    return float(cdist(t, c).min(axis=1).max())


@dataclass
class LimitingSetSample:
    """
    Spec2 clouds along n_list with distances to the expected limit.

    `circle_distance[n]` measures how far the target circle is from the
    cloud accumulated up to n. `eigen_distances[lam][n]` is dist(lam, Spec2(n)).
    The off-axis fields compare the circle samples with |Im| >= cut against
    the accumulated clouds of M and M + K.
    """

    n_list: List[int]
    clouds: Dict[int, np.ndarray]
    target: Optional[Tuple[float, float]] = None
    circle_distance: Dict[int, float] = field(default_factory=dict)
    eigen_distances: Dict[float, Dict[int, float]] = field(default_factory=dict)
    offaxis_base: Dict[int, float] = field(default_factory=dict)
    offaxis_perturbed: Dict[int, float] = field(default_factory=dict)

    @property
    def accumulated(self) -> np.ndarray:
        """The union of all per-n clouds."""
        return self.accumulated_until(self.n_list[-1])

    def accumulated_until(self, n: int) -> np.ndarray:
        clouds = [self.clouds[k] for k in self.n_list if k <= n]
        return np.concatenate(clouds) if clouds else np.zeros(0, dtype=np.complex128)


def limiting_set_scan(
    symbol: PiecewiseSymbol,
    pert: Optional[RankOneTerm],
    n_list: Sequence[int],
    lambdas: Optional[Sequence[float]] = None,
    spectra: Optional[Dict[int, SecondOrderSpectrum]] = None,
    window_scale: int = 1,
) -> LimitingSetSample:
    """
    Track how Spec2 fills its limiting set.

    Args:
        symbol: The symbol m
        pert: Optional rank-one term; enables the off-axis comparison with M
        n_list: Ascending truncation parameters, at least two
        lambdas: Eigenvalues to track (defaults to the discrete eigenvalues of M + K)
        spectra: Precomputed Spec2 of the scanned operator by n
        window_scale: Window half-width per unit of n
    """
    n_list = check_n_list(n_list)
    if len(n_list) < 2:
        raise ValueError("A limiting set scan needs at least two truncations")
    if spectra is None:
        spectra = spectrum_sweep(symbol, pert, n_list, window_scale=window_scale)
    if lambdas is None:
        lambdas = discrete_eigenvalues_rank_one(symbol, pert) if pert is not None else []

    sample = LimitingSetSample(
        n_list=n_list, clouds={n: np.asarray(spectra[n].points) for n in n_list}
    )

    for lam in lambdas:
        sample.eigen_distances[float(lam)] = {n: spectra[n].distance_to(lam) for n in n_list}

    if len(symbol.values) != 2:
        return sample

    sample.target = two_point_circle(symbol)
    ring = circle_samples(*sample.target)
    off_axis = ring[np.abs(ring.imag) >= OFFAXIS_IM_CUT]
    base = spectra
    if pert is not None:
        base = spectrum_sweep(symbol, None, n_list, window_scale=window_scale)
    base_sample = LimitingSetSample(n_list=n_list, clouds={n: base[n].points for n in n_list})

    for n in n_list:
        cloud = sample.accumulated_until(n)
        sample.circle_distance[n] = one_sided_distance(ring, cloud)
        sample.offaxis_base[n] = one_sided_distance(off_axis, base_sample.accumulated_until(n))
        if pert is not None:
            sample.offaxis_perturbed[n] = one_sided_distance(off_axis, cloud)
    return sample
