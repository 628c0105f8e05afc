"""Utility modules for specpol."""

from specpol.utils.constants import (
    CIRCLE_SAMPLES,
    DEFAULT_PRECISION,
    DESCENT_MAX_ITER,
    DESCENT_SHRINK,
    DESCENT_STEP0,
    DESCENT_TOL,
    GAP_DELTA,
    MAX_HALF_WIDTH,
    SZEGO_EPSILON,
)

__all__ = [
    "CIRCLE_SAMPLES",
    "DEFAULT_PRECISION",
    "DESCENT_MAX_ITER",
    "DESCENT_SHRINK",
    "DESCENT_STEP0",
    "DESCENT_TOL",
    "GAP_DELTA",
    "MAX_HALF_WIDTH",
    "SZEGO_EPSILON",
]
