"""The function sigma_n(z), its local descent to zeros, and real-axis scans."""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..errors import NoZeroFoundError, SolverError
from ..operators import MomentMatrices
from ..utils.constants import (
    DESCENT_MAX_ITER,
    DESCENT_SHRINK,
    DESCENT_STEP0,
    DESCENT_TOL,
    INVERSE_ITERATION_MAX_ITER,
    INVERSE_ITERATION_RTOL,
    SVD_DIMENSION_THRESHOLD,
)

# E, NE, N, NW, W, SW, S, SE
COMPASS = np.exp(1j * np.pi * np.arange(8) / 4)


def pencil(m: MomentMatrices, z: complex) -> np.ndarray:
    """Q(z) = z^2 I - 2 z A + B, the truncation of (M - z)^2."""
    z = complex(z)
    Q = m.B - 2 * z * m.A
    Q[np.diag_indices(m.d)] += z * z
    return Q


def _smallest_singular_value_lu(Q: np.ndarray) -> float:
    """Inverse iteration on Q*Q using a single LU factorisation of Q."""
    lu, piv = scipy.linalg.lu_factor(Q, check_finite=False)
    if np.any(np.diag(lu) == 0):
        return 0.0

    x = np.random.default_rng(0).standard_normal(Q.shape[0]).astype(np.complex128)
    x /= np.linalg.norm(x)
    estimate = 0.0
    for _ in range(INVERSE_ITERATION_MAX_ITER):
        # y = Q^{-1} Q^{-*} x
        y = scipy.linalg.lu_solve((lu, piv), x, trans=2, check_finite=False)
        y = scipy.linalg.lu_solve((lu, piv), y, check_finite=False)
        previous, estimate = estimate, float(np.vdot(x, y).real)
        norm = np.linalg.norm(y)
        if not np.isfinite(norm) or norm == 0.0:
            return 0.0
        x = y / norm
        if abs(estimate - previous) <= INVERSE_ITERATION_RTOL * estimate:
            break
    return 1.0 / math.sqrt(estimate) if estimate > 0 else 0.0


def sigma(m: MomentMatrices, z: complex) -> float:
    """
    Smallest singular value of Q(z).

    Vanishes exactly on Spec2 and equals 1 / ||Q(z)^{-1}|| elsewhere. Small
    problems use a full singular value decomposition; above
    SVD_DIMENSION_THRESHOLD an LU-based inverse iteration gives the same value.
    """
    if m.d == 0:
        return 0.0
    Q = pencil(m, z)
    try:
        if m.d <= SVD_DIMENSION_THRESHOLD:
            return float(scipy.linalg.svdvals(Q, check_finite=False)[-1])
        return _smallest_singular_value_lu(Q)
    except np.linalg.LinAlgError as e:
        raise SolverError(f"sigma({z}) failed: {e}", label=m.label, d=m.d, n=m.n)


@dataclass(frozen=True)
class DescentOptions:
    """Step control for the compass descent on sigma."""

    step0: float = DESCENT_STEP0
    shrink: float = DESCENT_SHRINK
    tol: float = DESCENT_TOL
    max_iter: int = DESCENT_MAX_ITER

    def __post_init__(self):
        if not self.step0 > 0:
            raise ValueError(f"step0 must be positive, got {self.step0}")
        if not 0 < self.shrink < 1:
            raise ValueError(f"shrink must lie in (0, 1), got {self.shrink}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be at least 1, got {self.max_iter}")


def sigma_descent(
    m: MomentMatrices, z0: complex, opts: DescentOptions = DescentOptions()
) -> complex:
    """
    Walk downhill on sigma until it vanishes.

    Every iteration tries the eight compass neighbours at the current step and
    moves to the best one if it improves sigma; otherwise the step shrinks.
    sigma has no local minima other than its zeros, so the walk cannot stall
    at a spurious point.

    Args:
        m: Moment matrices
        z0: Starting point
        opts: Step control

    Returns:
        A point z with sigma(z) <= opts.tol

    Raises:
        NoZeroFoundError: If max_iter is exhausted or the step underflows
    """
    z = complex(z0)
    value = sigma(m, z)
    step = opts.step0

    for _ in range(opts.max_iter):
        if value <= opts.tol:
            return z
        candidates = z + step * COMPASS
        values = [sigma(m, c) for c in candidates]
        best = int(np.argmin(values))

        if values[best] < value:
            z, value = complex(candidates[best]), values[best]
        else:
            step *= opts.shrink
            if step < np.finfo(float).eps * max(1.0, abs(z)):
                break

    if value <= opts.tol:
        return z
    raise NoZeroFoundError(
        f"Descent stopped at z = {z:.10g} with sigma = {value:.3e} > tol = {opts.tol:g}",
        z=z,
        value=value,
        label=m.label,
        d=m.d,
    )


@dataclass(frozen=True)
class SigmaGrid:
    """
    sigma sampled on a rectangle.

    `values` has shape (ny, nx): row j is the line Im = im_axis[j], so the
    flattened array runs with Re varying fastest.
    """

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    values: np.ndarray

    @property
    def nx(self) -> int:
        return self.values.shape[1]

    @property
    def ny(self) -> int:
        return self.values.shape[0]

    @property
    def re_axis(self) -> np.ndarray:
        return np.linspace(self.re_min, self.re_max, self.nx)

    @property
    def im_axis(self) -> np.ndarray:
        return np.linspace(self.im_min, self.im_max, self.ny)

    def nodes(self) -> np.ndarray:
        """Grid nodes with the same (ny, nx) layout as `values`."""
        re, im = np.meshgrid(self.re_axis, self.im_axis)
        return re + 1j * im

    def argmin(self) -> complex:
        """The node with the smallest sigma (first one on ties)."""
        j, i = np.unravel_index(int(np.argmin(self.values)), self.values.shape)
        return complex(self.re_axis[i], self.im_axis[j])


def sigma_grid(
    m: MomentMatrices,
    rect: Tuple[float, float, float, float],
    resolution: Tuple[int, int],
) -> SigmaGrid:
    """
    Evaluate sigma on an nx x ny grid.

    Args:
        m: Moment matrices
        rect: (re_min, re_max, im_min, im_max)
        resolution: (nx, ny), both at least 2
    """
    re_min, re_max, im_min, im_max = (float(v) for v in rect)
    nx, ny = (int(v) for v in resolution)
    if nx < 2 or ny < 2:
        raise ValueError(f"Grid resolution must be at least 2x2, got {nx}x{ny}")
    if not (re_min < re_max and im_min < im_max):
        raise ValueError(f"Degenerate grid rectangle {rect}")

    re = np.linspace(re_min, re_max, nx)
    im = np.linspace(im_min, im_max, ny)
    values = np.array([[sigma(m, complex(x, y)) for x in re] for y in im])
    return SigmaGrid(re_min=re_min, re_max=re_max, im_min=im_min, im_max=im_max, values=values)


def sigma_on_real_axis(m: MomentMatrices, lambdas: Sequence[float]) -> np.ndarray:
    """sigma at real points, where Q(lambda) is the Hermitian truncation of (M - lambda)^2."""
    return np.array([sigma(m, float(lam)) for lam in lambdas])


def real_axis_minima(values: Sequence[float]) -> List[int]:
    """Indices of interior local minima of a sampled profile."""
    v = np.asarray(values, dtype=float)
    return [i for i in range(1, len(v) - 1) if v[i] < v[i - 1] and v[i] <= v[i + 1]]


def shifted_square_estimates(m: MomentMatrices, zeta: float) -> Tuple[float, float]:
    """
    Eigenvalue estimates from the truncation of (M - zeta)^2.

    With mu0 the lowest eigenvalue of Q(zeta), an eigenvalue of M lies in
    [zeta - sqrt(mu0), zeta + sqrt(mu0)].

    Returns:
        (zeta - sqrt(mu0), zeta + sqrt(mu0))
    """
    zeta = float(zeta)
    Q = pencil(m, zeta)
    mu0 = float(scipy.linalg.eigvalsh(Q, subset_by_index=[0, 0])[0])
    radius = math.sqrt(max(mu0, 0.0))
    return zeta - radius, zeta + radius
