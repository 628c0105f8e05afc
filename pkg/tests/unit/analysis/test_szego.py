"""Unit tests for specpol.analysis.szego"""

import numpy as np
import pytest

from specpol.analysis.szego import joukowski, szego_stats
from specpol.operators import PiecewiseSymbol

pytestmark = pytest.mark.unit


class TestJoukowski:
    def test_unit_circle_maps_to_real_part(self):
        z = np.exp(1j * np.array([0.3, 1.2, 2.5]))
        assert np.allclose(joukowski(z), z.real)

    def test_fixed_points(self):
        assert np.allclose(joukowski(np.array([1.0, -1.0])), [1.0, -1.0])

    def test_rejects_zero(self):
        with pytest.raises(ValueError, match="undefined"):
            joukowski(np.array([0.0, 1.0]))


class TestSzegoStats:
    def test_half_symbol(self, half_symbol):
        stats = szego_stats(half_symbol, 20)
        assert stats.expected_minus == pytest.approx(0.5)
        assert stats.expected_plus == pytest.approx(0.5)
        assert stats.expected_mean == 0
        assert abs(stats.mean) <= 1e-10

    def test_fractions_are_probabilities(self, narrow_gap_symbol):
        stats = szego_stats(narrow_gap_symbol, 20, epsilon=0.2)
        assert 0 <= stats.frac_near_minus1 <= 1
        assert 0 <= stats.frac_near_plus1 <= 1
        assert stats.frac_near_minus1 + stats.frac_near_plus1 <= 1
        assert stats.epsilon == 0.2

    def test_mean_matches_zeroth_coefficient(self, narrow_gap_symbol):
        stats = szego_stats(narrow_gap_symbol, 15)
        assert stats.expected_mean == pytest.approx(30 / 32)
        assert stats.mean.real == pytest.approx(stats.expected_mean, abs=1e-10)

    def test_majority_clusters_at_the_larger_level(self, narrow_gap_symbol):
        stats = szego_stats(narrow_gap_symbol, 30)
        assert stats.frac_near_plus1 > stats.frac_near_minus1

    def test_rejects_other_values(self):
        with pytest.raises(ValueError, match="\\+-1 symbol"):
            szego_stats(PiecewiseSymbol.constant(2.0), 5)

    @pytest.mark.parametrize("epsilon", [0.0, 1.0, -0.1])
    def test_rejects_bad_epsilon(self, half_symbol, epsilon):
        with pytest.raises(ValueError, match="epsilon"):
            szego_stats(half_symbol, 5, epsilon=epsilon)
