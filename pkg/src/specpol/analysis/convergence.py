"""Convergence of Spec2 points to isolated eigenvalues."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from ..engine import SecondOrderSpectrum, closest_point
from ..operators import PiecewiseSymbol, RankOneTerm
from .sweep import check_n_list, spectrum_sweep


@dataclass(frozen=True)
class ConvergenceRow:
    """
    The Spec2 point nearest an eigenvalue at one truncation.

    `re_minus_lambda` is the magnitude |Re z_n - lambda|.
    """

    lam: float
    n: int
    lo: float
    hi: float
    re_minus_lambda: float
    im_abs: float
    point: complex

    @classmethod
    def from_point(cls, lam: float, n: int, z: complex) -> "ConvergenceRow":
        im_abs = abs(z.imag)
        return cls(
            lam=float(lam),
            n=n,
            lo=z.real - im_abs,
            hi=z.real + im_abs,
            re_minus_lambda=abs(z.real - lam),
            im_abs=im_abs,
            point=complex(z),
        )

    @property
    def encloses_lambda(self) -> bool:
        return self.lo <= self.lam <= self.hi


def convergence_table(
    symbol: PiecewiseSymbol,
    pert: Optional[RankOneTerm],
    lam: float,
    n_list: Sequence[int],
    spectra: Optional[Dict[int, SecondOrderSpectrum]] = None,
    window_scale: int = 1,
) -> List[ConvergenceRow]:
    """
    One row per n with the enclosure of the Spec2 point closest to lam.

    Args:
        symbol: The symbol m
        pert: Optional rank-one term
        lam: Isolated eigenvalue, usually from discrete_eigenvalues_rank_one
        n_list: Ascending truncation parameters
        spectra: Precomputed Spec2 by n, shared between eigenvalues
        window_scale: Window half-width per unit of n
    """
    n_list = check_n_list(n_list)
    if spectra is None:
        spectra = spectrum_sweep(symbol, pert, n_list, window_scale=window_scale)
    return [ConvergenceRow.from_point(lam, n, closest_point(spectra[n], lam)) for n in n_list]
