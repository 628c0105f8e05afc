"""Shared fixtures and helpers for integration tests."""

from typing import Dict

import pytest

from specpol.analysis import spectrum_sweep
from specpol.engine import SecondOrderSpectrum
from specpol.experiments import ExperimentConfig, load_preset

# ---------------------------------------------------------------------------
# Published reference rows: (lambda, n, lo, hi, |Re z_n - lambda|).
# Row n is computed on the window -2n..2n.
# ---------------------------------------------------------------------------

TABLE1_ROWS = [
    (-0.61803398, 85, -0.64711164, -0.59156988, 0.00130677),
    (-0.61803398, 120, -0.64232258, -0.59559824, 0.00092642),
    (-0.61803398, 155, -0.63930167, -0.59820046, 0.00071708),
    (-0.61803398, 190, -0.63717720, -0.60006016, 0.00058469),
    (-0.61803398, 225, -0.63557976, -0.60147516, 0.00049347),
    (1.61803398, 85, 1.58929960, 1.64481953, 0.00097441),
    (1.61803398, 120, 1.59398716, 1.64069975, 0.00069052),
    (1.61803398, 155, 1.59695260, 1.63804631, 0.00053453),
    (1.61803398, 190, 1.59904216, 1.63615390, 0.00043595),
    (1.61803398, 225, 1.60061565, 1.63471625, 0.00036803),
]

TABLE2_ROWS = [
    (-0.97901994, 85, -0.99169545, -0.97384630, 0.00375093),
    (-0.97901994, 120, -0.98897219, -0.97406728, 0.00249979),
    (-0.97901994, 155, -0.98740174, -0.97435952, 0.00186068),
    (-0.97901994, 190, -0.98635662, -0.97465104, 0.00148388),
    (-0.97901994, 225, -0.98561863, -0.97491625, 0.00124750),
    (1.97901994, 85, 1.95326913, 2.00377483, 0.00049795),
    (1.97901994, 120, 1.95700470, 2.00030477, 0.00036520),
    (1.97901994, 155, 1.95961155, 1.99784090, 0.00029371),
    (1.97901994, 190, 1.96164380, 1.99591836, 0.00023886),
    (1.97901994, 225, 1.96314714, 1.99449943, 0.00019665),
]


# ---------------------------------------------------------------------------
# Preset experiments and their spectra, computed once per module
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def table1() -> ExperimentConfig:
    return load_preset("table1")


@pytest.fixture(scope="module")
def table2() -> ExperimentConfig:
    return load_preset("table2")


@pytest.fixture(scope="module")
def table1_spectra(table1) -> Dict[int, SecondOrderSpectrum]:
    return spectrum_sweep(
        table1.symbol,
        table1.rank_one,
        table1.n_list,
        label=table1.label,
        window_scale=table1.window_scale,
    )


@pytest.fixture(scope="module")
def table2_spectra(table2) -> Dict[int, SecondOrderSpectrum]:
    return spectrum_sweep(
        table2.symbol,
        table2.rank_one,
        table2.n_list,
        label=table2.label,
        window_scale=table2.window_scale,
    )
