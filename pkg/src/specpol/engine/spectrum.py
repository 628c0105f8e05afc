"""Second order spectra: roots of det(z^2 I - 2 z A + B) via companion linearization."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

from ..errors import PairingError, SolverError
from ..operators import MomentMatrices
from ..utils.constants import PAIRING_FLOOR_FACTOR, PAIRING_RTOL, REFINE_CLAMP_FACTOR


@dataclass(frozen=True)
class SecondOrderSpectrum:
    """
    The multiset Spec2(M | L_n) of 2d complex points.

    `points` is closed under conjugation and sorted by (Re, Im). `upper`
    holds one representative per conjugate pair (Im >= 0), sorted the same way.
    `root_mean` is the mean of the unrefined companion eigenvalues, whose sum
    is the trace of the companion matrix.
    """

    points: np.ndarray
    upper: np.ndarray
    n: int
    label: str
    root_mean: Optional[complex] = None

    def __post_init__(self):
        for name in ("points", "upper"):
            values = np.array(getattr(self, name), dtype=np.complex128)
            values.setflags(write=False)
            object.__setattr__(self, name, values)
        if len(self.points) != 2 * len(self.upper):
            raise ValueError("Spec2 must hold exactly two points per conjugate pair")

    @property
    def d(self) -> int:
        return len(self.upper)

    @property
    def mean(self) -> complex:
        """Mean of the 2d roots; equals tr(A)/d."""
        if self.root_mean is not None:
            return complex(self.root_mean)
        return complex(self.points.mean()) if len(self.points) else 0j

    def distance_to(self, lam: complex) -> float:
        """Distance from lam to the nearest point."""
        return float(np.abs(self.points - lam).min())

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"SecondOrderSpectrum(label={self.label!r}, n={self.n}, points={len(self)})"


def companion_matrix(m: MomentMatrices) -> np.ndarray:
    """First companion form [[2A, -B], [I, 0]] of the monic pencil z^2 - 2zA + B."""
    d = m.d
    dtype = np.float64 if m.is_real else np.complex128
    A = m.A.real if m.is_real else m.A
    B = m.B.real if m.is_real else m.B
    return np.block([[2 * A, -B], [np.eye(d, dtype=dtype), np.zeros((d, d), dtype=dtype)]])


def _rayleigh_refine(m: MomentMatrices, raw: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """
    Replace every raw root by the nearest root of x* Q(t) x = 0.

    x is the lower block of the companion eigenvector, so Q(z) x = 0. The
    scalar quadratic t^2 - 2 t alpha + beta, alpha = x*Ax, beta = x*Bx, has real
    coefficients, which keeps refined roots symmetric about the real axis.
    Discriminants at rounding level are set to zero, so double roots on the
    real axis come out real instead of split by sqrt(eps).
    """
    d = m.d
    x = vectors[d:, :]
    weight = np.einsum("ij,ij->j", x.conj(), x).real
    alpha = np.einsum("ij,ij->j", x.conj(), m.A @ x).real / weight
    beta = np.einsum("ij,ij->j", x.conj(), m.B @ x).real / weight

    disc = alpha * alpha - beta
    scale = np.maximum(1.0, np.maximum(np.abs(beta), alpha * alpha))
    disc[np.abs(disc) <= REFINE_CLAMP_FACTOR * d * np.finfo(float).eps * scale] = 0.0
    root = np.sqrt(disc.astype(np.complex128))
    plus, minus = alpha + root, alpha - root
    return np.where(np.abs(plus - raw) <= np.abs(minus - raw), plus, minus)


def pair_conjugates(
    points: np.ndarray, floor: float = 0.0, rtol: float = PAIRING_RTOL
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pair every point with a conjugate partner and symmetrise the multiset.

    Points are visited in (Re, Im) order; each one is matched to the nearest
    unmatched point whose reflection lies within tolerance. Real roots of a
    Hermitian pencil have even multiplicity, so near-real points pair with each
    other and their representative is put on the real axis.

    Args:
        points: Raw roots (even count)
        floor: Absolute tolerance floor
        rtol: Relative tolerance, scaled by max(1, |z|)

    Returns:
        (symmetrised points, upper representatives)

    Raises:
        PairingError: If some point has no conjugate partner within tolerance
    """
    count = len(points)
    if count % 2:
        raise PairingError(f"Odd number of Spec2 points ({count})")

    folded = points.real + 1j * np.abs(points.imag)
    tol = np.maximum(rtol * np.maximum(1.0, np.abs(points)), floor)
    open_ = np.ones(count, dtype=bool)
    reps = []

    for i in np.lexsort((folded.imag, folded.real)):
        if not open_[i]:
            continue
        open_[i] = False
        candidates = np.flatnonzero(open_)
        if len(candidates) == 0:
            raise PairingError(f"Point {points[i]} is left without a conjugate partner")

        compatible = points[candidates].imag * points[i].imag <= tol[candidates] * tol[i]
        distance = np.where(compatible, np.abs(folded[candidates] - folded[i]), np.inf)
        best = int(np.argmin(distance))
        j = candidates[best]
        if distance[best] > max(tol[i], tol[j]):
            raise PairingError(
                f"Point {points[i]} has no conjugate partner "
                f"(nearest reflection at distance {distance[best]:.3e})"
            )
        open_[j] = False
        rep = 0.5 * (folded[i] + folded[j])
        if abs(points[i].imag) <= tol[i] and abs(points[j].imag) <= tol[j]:
            rep = complex(rep.real, 0.0)
        reps.append(rep)

    upper = np.array(reps, dtype=np.complex128)
    symmetric = np.concatenate([upper, upper.conj()])
    return symmetric, upper


def _sorted(values: np.ndarray) -> np.ndarray:
    return values[np.lexsort((values.imag, values.real))]


def second_order_spectrum(m: MomentMatrices, refine: bool = True) -> SecondOrderSpectrum:
    """
    Compute Spec2 from the moment matrices (A, B).

    Solves the 2d x 2d dense eigenproblem of the companion matrix; every root
    of det(z^2 I - 2zA + B) appears with its multiplicity.

    Args:
        m: Moment matrices of the operator on the trial space
        refine: Polish roots with the quadratic Rayleigh quotient

    Raises:
        SolverError: If the eigensolver does not converge
        PairingError: If the result is not closed under conjugation
    """
    if m.d == 0:
        empty = np.zeros(0, dtype=np.complex128)
        return SecondOrderSpectrum(points=empty, upper=empty, n=m.n, label=m.label)

    companion = companion_matrix(m)
    try:
        raw, vectors = scipy.linalg.eig(companion, right=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise SolverError(f"Companion eigensolver failed: {e}", label=m.label, d=m.d, n=m.n)
    if not np.all(np.isfinite(raw)):
        raise SolverError(
            "Companion eigensolver returned non-finite roots", label=m.label, d=m.d, n=m.n
        )

    roots = _rayleigh_refine(m, raw, vectors) if refine else raw

    scale = float(np.abs(companion).sum(axis=1).max())
    floor = PAIRING_FLOOR_FACTOR * math.sqrt(np.finfo(float).eps) * max(1.0, scale)
    try:
        points, upper = pair_conjugates(roots, floor=floor)
    except PairingError as e:
        raise PairingError(str(e), label=m.label, d=m.d, n=m.n)

    return SecondOrderSpectrum(
        points=_sorted(points),
        upper=_sorted(upper),
        n=m.n,
        label=m.label,
        root_mean=complex(raw.mean()),
    )
