"""Model operators: piecewise-constant symbols, rank-one terms and their moment matrices."""

from .intervals import IntervalSet, parse_pi_multiple
from .moments import MomentMatrices, assemble_multiplication, window_indices
from .rank_one import (
    RankOneTerm,
    assemble_rank_one,
    discrete_eigenvalues_rank_one,
    eigenfunction_rank_one,
    eigenfunction_residual,
    secular_residual,
    spectral_weights,
)
from .symbol import PiecewiseSymbol, fourier_coefficient, two_point_circle

__all__ = [
    "IntervalSet",
    "MomentMatrices",
    "PiecewiseSymbol",
    "RankOneTerm",
    "assemble_multiplication",
    "assemble_rank_one",
    "discrete_eigenvalues_rank_one",
    "eigenfunction_rank_one",
    "eigenfunction_residual",
    "fourier_coefficient",
    "parse_pi_multiple",
    "secular_residual",
    "spectral_weights",
    "two_point_circle",
    "window_indices",
]
