"""Per-n assembly and Spec2 sweeps shared by the experiments."""

from typing import Dict, List, Optional, Sequence

from ..engine import SecondOrderSpectrum, second_order_spectrum
from ..operators import (
    MomentMatrices,
    PiecewiseSymbol,
    RankOneTerm,
    assemble_multiplication,
    assemble_rank_one,
)


def check_n_list(n_list: Sequence[int]) -> List[int]:
    """
    Validate a list of truncation parameters.

    Raises:
        ValueError: If the list is empty, not strictly ascending or has negative entries
    """
    values = [int(n) for n in n_list]
    if not values:
        raise ValueError("n_list must not be empty")
    if any(n < 0 for n in values):
        raise ValueError(f"n_list entries must be non-negative, got {values}")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"n_list must be strictly ascending, got {values}")
    return values


def operator_moments(
    symbol: PiecewiseSymbol,
    pert: Optional[RankOneTerm],
    n: int,
    label: str = "operator",
    window_scale: int = 1,
) -> MomentMatrices:
    """
    Moment matrices of M (pert is None) or M + K for the truncation parameter n.

    The window is -window_scale * n .. window_scale * n, so d = 2 * window_scale * n + 1
    and the returned matrices carry the window half-width as their n.
    """
    if window_scale < 1:
        raise ValueError(f"window_scale must be at least 1, got {window_scale}")
    width = window_scale * n
    if pert is None:
        return assemble_multiplication(symbol, width, label=label)
    return assemble_rank_one(symbol, pert, width, label=label)


def spectrum_sweep(
    symbol: PiecewiseSymbol,
    pert: Optional[RankOneTerm],
    n_list: Sequence[int],
    label: str = "operator",
    window_scale: int = 1,
) -> Dict[int, SecondOrderSpectrum]:
    """Spec2 for every n in n_list, keyed and ordered by n."""
    return {
        n: second_order_spectrum(operator_moments(symbol, pert, n, label, window_scale))
        for n in check_n_list(n_list)
    }
