"""Unit tests for specpol.analysis.scan"""

import numpy as np
import pytest

from specpol.analysis.scan import real_axis_scan

pytestmark = pytest.mark.unit


class TestRealAxisScan:
    @pytest.fixture
    def scan(self, half_symbol, unit_pert):
        return real_axis_scan(half_symbol, unit_pert, 20, np.linspace(-1.5, 2.5, 201))

    def test_profile_shape(self, scan):
        assert scan.n == 20
        assert scan.values.shape == (201,)
        assert np.all(scan.values >= 0)

    def test_dip_near_upper_eigenvalue(self, scan, half_lambdas):
        assert any(abs(x - half_lambdas[1]) < 0.05 for x in scan.minima)

    def test_estimates_meet_spectrum(self, scan, half_lambdas):
        spectrum = [-1.0, 1.0, *half_lambdas]
        assert len(scan.estimates) == len(scan.minima)
        for lo, hi in scan.estimates:
            assert any(lo - 1e-9 <= x <= hi + 1e-9 for x in spectrum)

    def test_rejects_short_grid(self, half_symbol):
        with pytest.raises(ValueError, match="at least three"):
            real_axis_scan(half_symbol, None, 5, [0.0, 1.0])

    def test_rejects_unordered_grid(self, half_symbol):
        with pytest.raises(ValueError, match="ascending"):
            real_axis_scan(half_symbol, None, 5, [0.0, 2.0, 1.0])
