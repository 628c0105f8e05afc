"""Interval sets on the circle (-pi, pi] and pi-multiple parsing."""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

PI_MULTIPLE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<num>\d+)?(?:\s*/\s*(?P<den>\d+))?\s*\*?\s*(?P<pi>pi)?\s*$"
)

Angle = Union[str, int, float, Fraction]


def parse_pi_multiple(text: Angle) -> Fraction:
    """
    Parse a rational multiple of pi.

    Accepts strings such as ``"-15/16 pi"``, ``"pi"``, ``"-pi"``, ``"1/3pi"`` and
    ``"0"``. Integers and fractions are taken as already-reduced multiples.

    Returns:
        The coefficient q such that the angle equals q*pi

    Raises:
        ValueError: If the text is not a rational multiple of pi
    """
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError(f"Angle {text!r} must be written as a multiple of pi, e.g. '1/2 pi'")

    match = PI_MULTIPLE.match(str(text))
    if match is None or (match.group("num") is None and match.group("pi") is None):
        raise ValueError(f"Cannot parse angle {text!r}; expected forms like '-15/16 pi'")

    num = int(match.group("num")) if match.group("num") is not None else 1
    den = int(match.group("den")) if match.group("den") is not None else 1
    if den == 0:
        raise ValueError(f"Zero denominator in angle {text!r}")
    if match.group("pi") is None and num != 0:
        raise ValueError(f"Non-zero angle {text!r} must carry a 'pi' factor")

    value = Fraction(num, den)
    return -value if match.group("sign") == "-" else value


def to_radians(multiple: Fraction) -> float:
    """Convert a pi multiple to radians."""
    if multiple == 1:
        return math.pi
    if multiple == -1:
        return -math.pi
    return float(multiple) * math.pi


@dataclass(frozen=True)
class IntervalSet:
    """
    A finite union of half-open intervals (a, b] inside (-pi, pi].

    Intervals are kept sorted by left endpoint and must be pairwise disjoint.
    The empty set and the full circle are both allowed.
    """

    intervals: Tuple[Tuple[float, float], ...] = ()

    def __post_init__(self):
        cleaned = tuple((float(a), float(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", tuple(sorted(cleaned)))

        previous_end = -math.pi
        for a, b in self.intervals:
            if not (-math.pi <= a < b <= math.pi):
                raise ValueError(f"Interval ({a}, {b}] is not a subinterval of (-pi, pi]")
            if a < previous_end:
                raise ValueError(f"Interval ({a}, {b}] overlaps its predecessor")
            previous_end = b

    @classmethod
    def from_pi_multiples(cls, pairs: Iterable[Sequence[Angle]]) -> "IntervalSet":
        """Build an interval set from endpoint pairs given as multiples of pi."""
        intervals = []
        for pair in pairs:
            if len(pair) != 2:
                raise ValueError(f"Interval {pair!r} must have exactly two endpoints")
            a, b = (to_radians(parse_pi_multiple(x)) for x in pair)
            intervals.append((a, b))
        return cls(tuple(intervals))

    @classmethod
    def full(cls) -> "IntervalSet":
        return cls(((-math.pi, math.pi),))

    @property
    def measure(self) -> float:
        """Lebesgue measure |E|."""
        return sum(b - a for a, b in self.intervals)

    @property
    def complement_measure(self) -> float:
        """Lebesgue measure of the complement, 2*pi - |E|."""
        return max(0.0, 2 * math.pi - self.measure)

    def complement(self) -> "IntervalSet":
        """The complement (-pi, pi] minus E as an interval set."""
        gaps: List[Tuple[float, float]] = []
        cursor = -math.pi
        for a, b in self.intervals:
            if a > cursor:
                gaps.append((cursor, a))
            cursor = b
        if cursor < math.pi:
            gaps.append((cursor, math.pi))
        return IntervalSet(tuple(gaps))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def __len__(self) -> int:
        return len(self.intervals)

    def __str__(self) -> str:
        if self.is_empty:
            return "{}"
        return " U ".join(f"({a:.6g}, {b:.6g}]" for a, b in self.intervals)
