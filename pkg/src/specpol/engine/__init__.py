"""Spectral core: second order spectra, sigma_n and enclosures."""

from .enclosures import Enclosure, closest_point, enclosures
from .singular import (
    DescentOptions,
    SigmaGrid,
    pencil,
    real_axis_minima,
    shifted_square_estimates,
    sigma,
    sigma_descent,
    sigma_grid,
    sigma_on_real_axis,
)
from .spectrum import SecondOrderSpectrum, companion_matrix, pair_conjugates, second_order_spectrum

__all__ = [
    "DescentOptions",
    "Enclosure",
    "SecondOrderSpectrum",
    "SigmaGrid",
    "closest_point",
    "companion_matrix",
    "enclosures",
    "pair_conjugates",
    "pencil",
    "real_axis_minima",
    "second_order_spectrum",
    "shifted_square_estimates",
    "sigma",
    "sigma_descent",
    "sigma_grid",
    "sigma_on_real_axis",
]
