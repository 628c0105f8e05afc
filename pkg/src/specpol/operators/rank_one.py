"""Rank-one perturbations K = a <., psi> psi of multiplication operators."""

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np
import scipy.optimize
from numpy.polynomial import polynomial as P

from ..errors import AssemblyError, ResolventError
from .moments import MomentMatrices, assemble_multiplication, multiplied_coefficients
from .symbol import PiecewiseSymbol

NORM_TOL = 1e-12
WEIGHT_FLOOR = 1e-14


@dataclass(frozen=True)
class RankOneTerm:
    """
    The perturbation K f = a <f, psi> psi with ||psi|| = 1.

    `coeffs` holds the Fourier coefficients <psi, phi_j> for j = -p..p in the
    orthonormal basis phi_j = e^{ijx} / sqrt(2 pi). The constant function
    psi = (2 pi)^{-1/2} is the single coefficient [1] with `constant` set.
    """

    a: float
    coeffs: np.ndarray
    constant: bool = False

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128).ravel()
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "a", float(self.a))

        if not self.a > 0:
            raise ValueError(f"Coupling a must be positive, got {self.a}")
        if len(coeffs) % 2 != 1:
            raise ValueError("psi coefficients must cover a symmetric window -p..p")
        if abs(self.norm_squared - 1.0) > NORM_TOL:
            raise ValueError(f"psi must have unit norm, got ||psi||^2 = {self.norm_squared}")

    @classmethod
    def constant_psi(cls, a: float) -> "RankOneTerm":
        """The perturbation with psi = (2 pi)^{-1/2}, i.e. <psi, phi_0> = 1."""
        return cls(a=a, coeffs=np.array([1.0 + 0j]), constant=True)

    @classmethod
    def from_coefficients(
        cls, a: float, coeffs: Sequence[complex], normalize: bool = False
    ) -> "RankOneTerm":
        """
        Build a band-limited perturbation from coefficients on -p..p.

        Args:
            a: Coupling constant
            coeffs: Coefficients <psi, phi_j>, j = -p..p
            normalize: Rescale psi to unit norm instead of rejecting it
        """
        values = np.asarray(coeffs, dtype=np.complex128)
        if normalize:
            norm = float(np.linalg.norm(values))
            if norm == 0.0:
                raise ValueError("psi must not vanish")
            values = values / norm
        return cls(a=a, coeffs=values)

    @property
    def p(self) -> int:
        """Highest Fourier index carried by psi."""
        return (len(self.coeffs) - 1) // 2

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def window(self, n: int) -> np.ndarray:
        """Coefficients of P_n psi on -n..n (zero padded or cut)."""
        out = np.zeros(2 * n + 1, dtype=np.complex128)
        p = self.p
        for offset, c in zip(range(-p, p + 1), self.coeffs):
            if -n <= offset <= n:
                out[offset + n] = c
        return out

    def __repr__(self) -> str:
        kind = "constant" if self.constant else f"band p={self.p}"
        return f"RankOneTerm(a={self.a}, psi={kind})"


def _inner_with_psi(symbol: PiecewiseSymbol, pert: RankOneTerm) -> complex:
    """<m psi, psi> for a band-limited psi."""
    return complex(np.vdot(pert.coeffs, multiplied_coefficients(symbol, pert.coeffs, pert.p)))


def spectral_weights(symbol: PiecewiseSymbol, pert: RankOneTerm) -> Dict[float, float]:
    """
    The spectral measure of psi for multiplication by the symbol.

    Returns:
        Mapping value v -> mu_psi({m = v}) = int_{m = v} |psi|^2 dx
    """
    if pert.constant:
        return {v: mass / (2 * math.pi) for v, mass in symbol.level_measures().items()}
    return {v: _inner_with_psi(symbol.indicator(v), pert).real for v in symbol.values}


def assemble_rank_one(
    base: PiecewiseSymbol, pert: RankOneTerm, n: int, label: str = "rank-one"
) -> MomentMatrices:
    """
    Exact moment matrices of M + K.

    A' = A + a v v*, B' = B + a (w v* + v w*) + a^2 v v*, where v = P_n psi and
    w = P_n M psi. Truncating a rank-one term is exact, so no error enters
    beyond the window.

    Raises:
        AssemblyError: If psi carries modes outside the window -n..n
    """
    if n < 0:
        raise ValueError(f"Truncation parameter must be non-negative, got {n}")
    if not pert.constant and pert.p > n:
        raise AssemblyError(
            f"psi has modes up to |j| = {pert.p} beyond the window n = {n}; "
            "raise n or supply psi in closed form"
        )

    moments = assemble_multiplication(base, n, label=label)
    v = pert.window(n)
    w = multiplied_coefficients(base, pert.coeffs, n)
    a = pert.a

    vv = np.outer(v, v.conj())
    A = moments.A + a * vv
    B = moments.B + a * (np.outer(w, v.conj()) + np.outer(v, w.conj())) + a * a * vv
    return MomentMatrices(A=A, B=B, label=label, n=n)


def _secular_polynomial(weights: Dict[float, float], a: float) -> np.ndarray:
    """Coefficients (ascending) of prod(l - v) - a sum_i mu_i prod_{j != i}(l - v_j)."""
    values = list(weights)
    poly = P.polyfromroots(values)
    for i, v in enumerate(values):
        others = values[:i] + values[i + 1 :]
        poly = P.polysub(poly, a * weights[v] * P.polyfromroots(others))
    return poly


def discrete_eigenvalues_rank_one(symbol: PiecewiseSymbol, pert: RankOneTerm) -> List[float]:
    """
    Isolated eigenvalues of M + K.

    Solves sum_v mu_psi({m = v}) / (lambda - v) = 1/a. For the +-1 symbol this
    is the quadratic mu(E)/(lambda-1) + mu(E^c)/(lambda+1) = 1/a. The secular
    function decreases between consecutive poles, so there is exactly one root
    in every gap between occupied values and one above the largest value.

    Returns:
        Sorted roots; each is a non-degenerate eigenvalue
    """
    weights = {v: mu for v, mu in spectral_weights(symbol, pert).items() if mu > WEIGHT_FLOOR}
    if not weights:
        return []

    poly = _secular_polynomial(weights, pert.a)
    poles = sorted(weights)
    brackets = list(zip(poles, poles[1:])) + [(poles[-1], poles[-1] + pert.a + 1.0)]

    roots = []
    for low, high in brackets:
        f_low, f_high = P.polyval(low, poly), P.polyval(high, poly)
        if f_low == 0.0 or f_high == 0.0 or np.sign(f_low) == np.sign(f_high):
            continue
        roots.append(
            scipy.optimize.brentq(lambda x: P.polyval(x, poly), low, high, xtol=1e-15, rtol=1e-15)
        )
    return sorted(float(r) for r in roots)


def secular_residual(symbol: PiecewiseSymbol, pert: RankOneTerm, lam: float) -> float:
    """Left minus right side of the eigenvalue equation at lam."""
    total = sum(mu / (lam - v) for v, mu in spectral_weights(symbol, pert).items() if mu)
    return total - 1.0 / pert.a


def _resolvent_symbol(symbol: PiecewiseSymbol, lam: float) -> PiecewiseSymbol:
    for v in symbol.values:
        if abs(lam - v) <= 1e-14 * max(1.0, abs(v)):
            raise ResolventError(f"lambda = {lam} lies on the essential spectrum value {v}")
    return symbol.map(lambda v: 1.0 / (lam - v))


def eigenfunction_rank_one(
    symbol: PiecewiseSymbol, pert: RankOneTerm, lam: float, n: int
) -> np.ndarray:
    """
    Fourier coefficients on -n..n of the eigenfunction phi = (lam - M)^{-1} psi.

    The function is normalised to unit L2 norm over the whole circle, not
    just over the window.

    Raises:
        ResolventError: If lam is a value of the symbol
    """
    resolvent = _resolvent_symbol(symbol, lam)
    raw = multiplied_coefficients(resolvent, pert.coeffs, n)
    norm_squared = _inner_with_psi(resolvent.squared(), pert).real
    return raw / math.sqrt(norm_squared)


def eigenfunction_residual(
    symbol: PiecewiseSymbol, pert: RankOneTerm, lam: float, n: int
) -> float:
    """
    ||P_n (M + K - lam) phi|| for the normalised eigenfunction phi.

    Every term is evaluated in closed form (M phi is again a symbol times psi),
    so the result measures how well lam solves the eigenvalue equation.
    """
    resolvent = _resolvent_symbol(symbol, lam)
    scale = 1.0 / math.sqrt(_inner_with_psi(resolvent.squared(), pert).real)

    m_phi = multiplied_coefficients(symbol.multiply(resolvent), pert.coeffs, n)
    phi = multiplied_coefficients(resolvent, pert.coeffs, n)
    k_phi = pert.a * _inner_with_psi(resolvent, pert) * pert.window(n)
    residual = scale * (m_phi + k_phi - lam * phi)
    return float(np.linalg.norm(residual))

