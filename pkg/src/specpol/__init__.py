"""specpol - second order relative spectra of self-adjoint operators."""

__version__ = "0.1.0"
