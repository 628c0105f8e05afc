"""Moment matrices A = <M phi_j, phi_k> and B = <M^2 phi_j, phi_k> in the Fourier basis."""

from dataclasses import dataclass
from typing import List

import numpy as np
import scipy.linalg

from ..utils.constants import HERMITIAN_RTOL, PSD_RTOL
from .symbol import PiecewiseSymbol


def window_indices(n: int) -> np.ndarray:
    """Fourier indices -n..n of the trial space L_n, in basis order."""
    return np.arange(-n, n + 1)


def toeplitz_window(symbol: PiecewiseSymbol, n: int) -> np.ndarray:
    """The (2n+1)x(2n+1) Toeplitz matrix T[j][k] = m^(j-k), j,k = -n..n."""
    column = symbol.fourier_coefficients(np.arange(0, 2 * n + 1))
    return scipy.linalg.toeplitz(column, np.conj(column))


def multiplied_coefficients(symbol: PiecewiseSymbol, coeffs: np.ndarray, n: int) -> np.ndarray:
    """
    Fourier coefficients on -n..n of m*psi for a band-limited psi.

    Args:
        symbol: The multiplier m
        coeffs: Coefficients of psi on -p..p (length 2p+1)
        n: Output window half-width

    Returns:
        Vector of length 2n+1; exact, since psi has finitely many modes
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    p = (len(coeffs) - 1) // 2
    offsets = window_indices(n)[:, None] - window_indices(p)[None, :]
    kernel = symbol.fourier_coefficients(offsets.ravel()).reshape(offsets.shape)
    return kernel @ coeffs


@dataclass(frozen=True)
class MomentMatrices:
    """
    Compressions of M and M^2 to a trial space, in an orthonormal basis.

    The quadratic pencil z^2 I - 2 z A + B is monic because the basis is
    orthonormal.
    """

    A: np.ndarray
    B: np.ndarray
    label: str = "operator"
    n: int = 0

    def __post_init__(self):
        A = np.array(self.A, dtype=np.complex128)
        B = np.array(self.B, dtype=np.complex128)
        if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
            raise ValueError(f"A and B must be equal square matrices, got {A.shape} and {B.shape}")
        A.setflags(write=False)
        B.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def d(self) -> int:
        return self.A.shape[0]

    @property
    def is_real(self) -> bool:
        return not (np.any(self.A.imag) or np.any(self.B.imag))

    def check(self) -> List[str]:
        """
        Check the moment invariants.

        Returns:
            List of violated invariants (empty if valid)
        """
        problems = []
        norm_a = max(float(np.abs(self.A).max(initial=0.0)), 1.0)
        norm_b = float(scipy.linalg.norm(self.B, 2)) if self.d else 0.0

        if np.abs(self.A - self.A.conj().T).max(initial=0.0) > HERMITIAN_RTOL * norm_a:
            problems.append("A is not Hermitian")
        if np.abs(self.B - self.B.conj().T).max(initial=0.0) > HERMITIAN_RTOL * max(norm_b, 1.0):
            problems.append("B is not Hermitian")
        if problems:
            return problems

        floor = -PSD_RTOL * max(norm_b, 1e-300)
        if self.d and scipy.linalg.eigvalsh(self.B)[0] < floor:
            problems.append("B is not positive semi-definite")
        gap = self.B - self.A @ self.A
        gap = 0.5 * (gap + gap.conj().T)
        if self.d and scipy.linalg.eigvalsh(gap)[0] < floor:
            problems.append("B - A^2 is not positive semi-definite")
        return problems

    def validate(self) -> None:
        """Raise ValueError if any invariant fails."""
        problems = self.check()
        if problems:
            raise ValueError(f"Invalid moment matrices for {self.label}: {'; '.join(problems)}")

    def __repr__(self) -> str:
        return f"MomentMatrices(label={self.label!r}, n={self.n}, d={self.d})"


def assemble_multiplication(
    symbol: PiecewiseSymbol, n: int, label: str = "multiplication"
) -> MomentMatrices:
    """
    Exact moment matrices of multiplication by a piecewise-constant symbol.

    A is the Toeplitz matrix of m and B the Toeplitz matrix of m^2 on the
    window -n..n.
    """
    if n < 0:
        raise ValueError(f"Truncation parameter must be non-negative, got {n}")
    A = toeplitz_window(symbol, n)
    B = toeplitz_window(symbol.squared(), n)
    return MomentMatrices(A=A, B=B, label=label, n=n)
