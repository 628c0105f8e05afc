"""Shared fixtures for the entire test suite."""

import math

import numpy as np
import pytest

from specpol.operators import IntervalSet, MomentMatrices, PiecewiseSymbol, RankOneTerm

SQRT5 = math.sqrt(5.0)
SQRT875 = math.sqrt(8.75)


@pytest.fixture
def half_symbol():
    """m = 1 on (0, pi], -1 on (-pi, 0]."""
    return PiecewiseSymbol.from_interval_set(IntervalSet.from_pi_multiples([["0", "pi"]]))


@pytest.fixture
def narrow_gap_symbol():
    """m = 1 on (-15/16 pi, pi], -1 on the short arc (-pi, -15/16 pi]."""
    return PiecewiseSymbol.from_interval_set(IntervalSet.from_pi_multiples([["-15/16 pi", "pi"]]))


@pytest.fixture
def identity_symbol():
    """m = 1 everywhere."""
    return PiecewiseSymbol.from_interval_set(IntervalSet.full())


@pytest.fixture
def unit_pert():
    """K = <., psi> psi with psi constant and a = 1."""
    return RankOneTerm.constant_psi(1.0)


@pytest.fixture
def half_lambdas():
    return [(1 - SQRT5) / 2, (1 + SQRT5) / 2]


@pytest.fixture
def narrow_gap_lambdas():
    return [(1 - SQRT875) / 2, (1 + SQRT875) / 2]


@pytest.fixture
def scalar_moments():
    """A = B = [1]: the pencil (z - 1)^2."""
    return MomentMatrices(A=np.eye(1), B=np.eye(1), label="scalar")


@pytest.fixture
def diagonal_moments():
    """A = diag(-1, 1), B = I, the compression of a +-1 multiplier onto two eigenvectors."""
    return MomentMatrices(A=np.diag([-1.0, 1.0]), B=np.eye(2), label="diagonal")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
