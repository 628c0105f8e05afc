"""Piecewise-constant symbols on (-pi, pi] and their Fourier coefficients."""

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Tuple

import numpy as np

from .intervals import IntervalSet

Piece = Tuple[float, float, float]


def _phase(k: np.ndarray, x: float, parity: np.ndarray) -> np.ndarray:
    # e^{-ik(+-pi)} = (-1)^k exactly
    if abs(x) == math.pi:
        return parity
    return np.exp(-1j * k * x)


def _merge_adjacent(pieces: Iterable[Piece]) -> Tuple[Piece, ...]:
    merged: List[Piece] = []
    for a, b, v in pieces:
        if merged and merged[-1][2] == v:
            merged[-1] = (merged[-1][0], b, v)
        else:
            merged.append((a, b, v))
    return tuple(merged)


@dataclass(frozen=True)
class PiecewiseSymbol:
    """
    A real piecewise-constant function on (-pi, pi].

    Pieces are half-open intervals (a, b] with a constant value, sorted and
    covering the whole circle without gaps or overlaps.
    """

    pieces: Tuple[Piece, ...]

    def __post_init__(self):
        pieces = tuple((float(a), float(b), float(v)) for a, b, v in self.pieces)
        object.__setattr__(self, "pieces", pieces)

        if not pieces:
            raise ValueError("A symbol needs at least one piece")
        if pieces[0][0] != -math.pi or pieces[-1][1] != math.pi:
            raise ValueError("Symbol pieces must start at -pi and end at pi")
        for (a, b, _), (next_a, _, _) in zip(pieces, pieces[1:]):
            if b != next_a:
                raise ValueError(f"Pieces leave a gap or overlap at {b} / {next_a}")
        for a, b, v in pieces:
            if not a < b:
                raise ValueError(f"Empty piece ({a}, {b}]")
            if not math.isfinite(v):
                raise ValueError(f"Piece ({a}, {b}] has non-finite value {v}")

    @classmethod
    def from_interval_set(
        cls, interval_set: IntervalSet, inside: float = 1.0, outside: float = -1.0
    ) -> "PiecewiseSymbol":
        """
        Build the two-valued symbol equal to `inside` on E and `outside` elsewhere.

        Args:
            interval_set: The set E
            inside: Value on E (1 for the model symbol)
            outside: Value on the complement (-1 for the model symbol)
        """
        pieces: List[Piece] = []
        for a, b in interval_set.intervals:
            pieces.append((a, b, inside))
        for a, b in interval_set.complement().intervals:
            pieces.append((a, b, outside))
        return cls(_merge_adjacent(sorted(pieces)))

    @classmethod
    def constant(cls, value: float) -> "PiecewiseSymbol":
        return cls(((-math.pi, math.pi, value),))

    @property
    def breakpoints(self) -> List[float]:
        return [self.pieces[0][0]] + [b for _, b, _ in self.pieces]

    @property
    def values(self) -> List[float]:
        """Distinct values taken on sets of positive measure, ascending."""
        return sorted({v for _, _, v in self.pieces})

    @property
    def min_value(self) -> float:
        return self.values[0]

    @property
    def max_value(self) -> float:
        return self.values[-1]

    def level_measures(self) -> Dict[float, float]:
        """Lebesgue measure of each level set {m = v}."""
        measures: Dict[float, float] = {}
        for a, b, v in self.pieces:
            measures[v] = measures.get(v, 0.0) + (b - a)
        return measures

    def measure_of(self, value: float) -> float:
        return self.level_measures().get(float(value), 0.0)

    def indicator(self, value: float) -> "PiecewiseSymbol":
        """The indicator function of the level set {m = value}."""
        return self.map(lambda v: 1.0 if v == value else 0.0)

    def map(self, transform: Callable[[float], float]) -> "PiecewiseSymbol":
        """Apply `transform` to every piece value, merging neighbours that become equal."""
        return PiecewiseSymbol(_merge_adjacent((a, b, transform(v)) for a, b, v in self.pieces))

    def squared(self) -> "PiecewiseSymbol":
        return self.map(lambda v: v * v)

    def multiply(self, other: "PiecewiseSymbol") -> "PiecewiseSymbol":
        """Pointwise product on the common refinement of both partitions."""
        cuts = sorted(set(self.breakpoints) | set(other.breakpoints))
        pieces = []
        for a, b in zip(cuts, cuts[1:]):
            mid = 0.5 * (a + b)
            pieces.append((a, b, float(self(mid)) * float(other(mid))))
        return PiecewiseSymbol(_merge_adjacent(pieces))

    def __call__(self, x):
        """Evaluate the symbol at points of (-pi, pi]."""
        ends = np.array([b for _, b, _ in self.pieces])
        vals = np.array([v for _, _, v in self.pieces])
        idx = np.searchsorted(ends, np.asarray(x, dtype=float), side="left")
        idx = np.clip(idx, 0, len(ends) - 1)
        return vals[idx]

    def fourier_coefficients(self, ks: Iterable[int]) -> np.ndarray:
        """
        Closed-form Fourier coefficients (2 pi)^-1 int m(x) e^{-ikx} dx.

        Coefficients at negative k are taken as conjugates of those at |k|, so
        the conjugate symmetry of a real symbol holds exactly.
        """
        ks = np.asarray(list(ks) if not isinstance(ks, np.ndarray) else ks, dtype=np.int64)
        absk = np.abs(ks)
        out = np.zeros(ks.shape, dtype=np.complex128)

        zero = absk == 0
        out[zero] = sum(v * (b - a) for a, b, v in self.pieces) / (2 * math.pi)

        nonzero = ~zero
        if np.any(nonzero):
            k = absk[nonzero].astype(float)
            parity = np.where(absk[nonzero] % 2 == 0, 1.0, -1.0).astype(np.complex128)
            acc = np.zeros(k.shape, dtype=np.complex128)
            for a, b, v in self.pieces:
                if v == 0.0:
                    continue
                acc += v * (_phase(k, b, parity) - _phase(k, a, parity))
            coeffs = 1j * acc / (2 * math.pi * k)
            coeffs = np.where(ks[nonzero] < 0, np.conj(coeffs), coeffs)
            out[nonzero] = coeffs
        return out

    def __str__(self) -> str:
        return ", ".join(f"({a:.6g}, {b:.6g}]->{v:g}" for a, b, v in self.pieces)


def fourier_coefficient(symbol: PiecewiseSymbol, k: int) -> complex:
    """Fourier coefficient m^(k) of a piecewise-constant symbol."""
    return complex(symbol.fourier_coefficients([k])[0])


def two_point_circle(symbol: PiecewiseSymbol) -> Tuple[float, float]:
    """
    Center and radius of the circle carrying Spec2 for a two-valued symbol.

    For values a < b this is the circle |z - (a+b)/2| = (b-a)/2.

    Raises:
        ValueError: If the symbol does not take exactly two values
    """
    values = symbol.values
    if len(values) != 2:
        raise ValueError(f"Symbol takes {len(values)} values; a two-valued symbol is required")
    low, high = values
    return 0.5 * (low + high), 0.5 * (high - low)
