"""Unit tests for specpol.engine.enclosures"""

import numpy as np
import pytest

from specpol.engine.enclosures import Enclosure, closest_point, enclosures
from specpol.engine.spectrum import SecondOrderSpectrum, second_order_spectrum
from specpol.operators import MomentMatrices, assemble_rank_one

pytestmark = pytest.mark.unit


@pytest.fixture
def two_pairs():
    upper = np.array([0.5 + 0.2j, 2.0 + 0.01j])
    return SecondOrderSpectrum(
        points=np.concatenate([upper, upper.conj()]), upper=upper, n=1, label="pairs"
    )


class TestEnclosure:
    def test_from_real_point(self):
        e = Enclosure.from_point(1.0)
        assert (e.lo, e.hi) == (1.0, 1.0)
        assert e.half_width == 0.0

    def test_from_complex_point(self):
        e = Enclosure.from_point(0.5 - 0.2j)
        assert e.lo == pytest.approx(0.3)
        assert e.hi == pytest.approx(0.7)
        assert e.center == 0.5
        assert e.half_width == pytest.approx(0.2)

    def test_contains(self):
        e = Enclosure.from_point(1 + 0.1j)
        assert e.contains(1.05)
        assert not e.contains(1.2)
        assert e.contains(1.1 + 1e-12, tol=1e-9)

    def test_meets(self):
        e = Enclosure.from_point(1 + 0.1j)
        assert e.meets([0.0, 0.95])
        assert not e.meets([0.0, 2.0])
        assert not e.meets([])

    def test_str(self):
        assert str(Enclosure.from_point(1 + 0.5j)) == "[0.50000000, 1.50000000]"


class TestEnclosures:
    def test_one_per_pair_sorted(self, two_pairs):
        found = enclosures(two_pairs)
        assert len(found) == 2
        assert [e.lo for e in found] == sorted(e.lo for e in found)

    def test_width_filter(self, two_pairs):
        found = enclosures(two_pairs, max_half_width=0.05)
        assert len(found) == 1
        assert found[0].center == 2.0

    def test_no_filter_when_none(self, two_pairs):
        assert len(enclosures(two_pairs, None)) == two_pairs.d

    def test_every_enclosure_meets_spectrum(self, narrow_gap_symbol, unit_pert, narrow_gap_lambdas):
        s = second_order_spectrum(assemble_rank_one(narrow_gap_symbol, unit_pert, 15))
        # the spectrum of M + K is {-1, 1} plus the two isolated eigenvalues
        spectrum = [-1.0, 1.0, *narrow_gap_lambdas]
        assert all(e.meets(spectrum, tol=1e-6) for e in enclosures(s))


class TestClosestPoint:
    def test_picks_nearest(self, two_pairs):
        assert closest_point(two_pairs, 1.9) == 2.0 + 0.01j

    def test_returns_upper_representative(self, two_pairs):
        assert closest_point(two_pairs, 0.5).imag > 0

    def test_rejects_empty(self):
        s = second_order_spectrum(MomentMatrices(A=np.zeros((0, 0)), B=np.zeros((0, 0))))
        with pytest.raises(ValueError, match="empty"):
            closest_point(s, 0.0)
