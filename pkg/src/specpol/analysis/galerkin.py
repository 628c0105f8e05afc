"""The linear (Galerkin) method and its spectral pollution."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..engine import Enclosure, SecondOrderSpectrum, enclosures
from ..errors import SolverError
from ..operators import MomentMatrices, PiecewiseSymbol, RankOneTerm, discrete_eigenvalues_rank_one
from ..utils.constants import DISCRETE_MATCH_TOL, GAP_DELTA, MAX_HALF_WIDTH
from .sweep import check_n_list, operator_moments, spectrum_sweep


def galerkin_spectrum(m: MomentMatrices) -> np.ndarray:
    """Sorted eigenvalues of the compression A."""
    try:
        return scipy.linalg.eigvalsh(m.A)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise SolverError(f"Hermitian eigensolver failed: {e}", label=m.label, d=m.d, n=m.n)


@dataclass
class PollutionRow:
    """Galerkin eigenvalues of one truncation and what lies inside the essential gap."""

    n: int
    eigenvalues: List[float] = field(default_factory=list)
    galerkin_in_gap: List[float] = field(default_factory=list)
    polluting: List[float] = field(default_factory=list)
    enclosures_in_gap: List[Enclosure] = field(default_factory=list)
    spurious_enclosures: List[Enclosure] = field(default_factory=list)

    @property
    def polluting_count(self) -> int:
        return len(self.polluting)


def essential_gap(symbol: PiecewiseSymbol, gap_delta: float = GAP_DELTA) -> Tuple[float, float]:
    """The open window (min m + delta, max m - delta) between the extreme symbol values."""
    return symbol.min_value + gap_delta, symbol.max_value - gap_delta


def pollution_report(
    symbol: PiecewiseSymbol,
    pert: Optional[RankOneTerm],
    n_list: Sequence[int],
    gap_delta: float = GAP_DELTA,
    max_half_width: Optional[float] = MAX_HALF_WIDTH,
    match_tol: float = DISCRETE_MATCH_TOL,
    spectra: Optional[Dict[int, SecondOrderSpectrum]] = None,
    window_scale: int = 1,
) -> List[PollutionRow]:
    """
    Contrast Galerkin eigenvalues with Spec2 enclosures inside the gap.

    A Galerkin eigenvalue in the gap is polluting when it is farther than
    match_tol from every true discrete eigenvalue. An enclosure in the gap is
    spurious when it contains none of them; there should be none.

    Args:
        symbol: The symbol m
        pert: Optional rank-one term
        n_list: Ascending truncation parameters
        gap_delta: Margin cut from both ends of the gap
        max_half_width: Only enclosures at most this wide are reported
        match_tol: Distance below which a Galerkin eigenvalue counts as genuine
        spectra: Precomputed Spec2 by n (computed when omitted)
        window_scale: Window half-width per unit of n
    """
    n_list = check_n_list(n_list)
    exact = discrete_eigenvalues_rank_one(symbol, pert) if pert is not None else []
    low, high = essential_gap(symbol, gap_delta)
    if spectra is None:
        spectra = spectrum_sweep(symbol, pert, n_list, window_scale=window_scale)

    rows = []
    for n in n_list:
        m = operator_moments(symbol, pert, n, window_scale=window_scale)
        eigenvalues = galerkin_spectrum(m)
        in_gap = [float(x) for x in eigenvalues if low < x < high]
        polluting = [x for x in in_gap if all(abs(x - lam) > match_tol for lam in exact)]

        inside = [e for e in enclosures(spectra[n], max_half_width) if low < e.lo and e.hi < high]
        spurious = [e for e in inside if not e.meets(exact)]
        rows.append(
            PollutionRow(
                n=n,
                eigenvalues=[float(x) for x in eigenvalues],
                galerkin_in_gap=in_gap,
                polluting=polluting,
                enclosures_in_gap=inside,
                spurious_enclosures=spurious,
            )
        )
    return rows
