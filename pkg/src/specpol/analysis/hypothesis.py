"""Residuals of the compressed actions of M and M^2 on an eigenfunction."""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..engine import sigma
from ..operators import PiecewiseSymbol, RankOneTerm, eigenfunction_rank_one
from ..utils.constants import REFERENCE_FACTOR
from .sweep import check_n_list, operator_moments


@dataclass(frozen=True)
class HResidualRow:
    """
    r1 = ||P_n M P_n phi - lam phi||, r2 = ||P_n M^2 P_n phi - lam^2 phi|| and sigma_n(lam).

    Norms are taken over the reference window, so the part of phi outside
    -n..n counts towards both residuals.
    """

    lam: float
    n: int
    r1: float
    r2: float
    sigma: float


def condition_H_residuals(
    symbol: PiecewiseSymbol,
    pert: RankOneTerm,
    lam: float,
    n_list: Sequence[int],
    reference_n: Optional[int] = None,
    window_scale: int = 1,
) -> List[HResidualRow]:
    """
    Measure how well the truncations act on the eigenfunction for lam.

    Args:
        symbol: The symbol m
        pert: Rank-one term defining M + K
        lam: Isolated eigenvalue of M + K
        n_list: Ascending truncation parameters
        reference_n: Half-width of the reference eigenfunction window
            (default 4 * window_scale * max(n_list))
        window_scale: Window half-width per unit of n
    """
    n_list = check_n_list(n_list)
    widest = window_scale * n_list[-1]
    big = reference_n if reference_n is not None else REFERENCE_FACTOR * widest
    if big < widest:
        raise ValueError(f"reference window {big} is smaller than the widest window {widest}")

    phi = eigenfunction_rank_one(symbol, pert, lam, big)

    rows = []
    for n in n_list:
        m = operator_moments(symbol, pert, n, "rank-one", window_scale)
        inner = phi[big - m.n : big + m.n + 1]
        tail = math.sqrt(max(float(np.vdot(phi, phi).real - np.vdot(inner, inner).real), 0.0))

        head1 = float(np.linalg.norm(m.A @ inner - lam * inner))
        head2 = float(np.linalg.norm(m.B @ inner - lam * lam * inner))
        rows.append(
            HResidualRow(
                lam=float(lam),
                n=n,
                r1=math.hypot(head1, abs(lam) * tail),
                r2=math.hypot(head2, lam * lam * tail),
                sigma=sigma(m, lam),
            )
        )
    return rows
