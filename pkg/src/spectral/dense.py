"""
Dense floating-point Laplacian spectra by cyclic Jacobi rotations.

Used as a cross-check for the exact inertia counts and to print the
3-decimal eigenvalue tables. Sweeps visit every (p, q) pair above the
diagonal; each rotation zeroes one off-diagonal entry. Iteration stops once
the off-diagonal Frobenius norm drops below the tolerance, which bounds the
distance from each diagonal entry to a true eigenvalue.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.core.errors import CapExceededError, SpectreeError
from src.graph.core import Graph
from src.spectral.laplacian import laplacian

logger = logging.getLogger(__name__)

DEFAULT_DENSE_CAP = 64
DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_SWEEPS = 100
DEFAULT_THRESHOLD_GUARD = 1e-6


class DenseCapExceededError(CapExceededError):
    """Graph too large for the dense eigensolver."""

    def __init__(self, requested: int, cap: int):
        super().__init__("dense eigensolver", requested, cap)


class ConvergenceError(SpectreeError):
    """
    Jacobi iteration did not converge.

    Attributes:
        sweeps: Number of full sweeps performed
        off_norm: Off-diagonal Frobenius norm when iteration stopped
    """

    def __init__(self, sweeps: int, off_norm: float, tolerance: float):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e} > tolerance {tolerance:.1e})"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm


@dataclass(frozen=True)
class Spectrum:
    """
    Ascending Laplacian eigenvalues with the solver's accuracy bound.

    Attributes:
        values: mu_1 <= ... <= mu_n
        tolerance: Each value is within this distance of a true eigenvalue
    """

    values: tuple[float, ...]
    tolerance: float

    def __len__(self) -> int:
        return len(self.values)

    def descending(self) -> list[float]:
        return sorted(self.values, reverse=True)

    def rounded(self, decimals: int = 3) -> list[float]:
        """Descending values rounded for display, with -0.0 folded to 0.0."""
        return [round(v, decimals) + 0.0 for v in self.descending()]

    def count_below(self, alpha: float) -> int:
        return sum(1 for v in self.values if v < alpha)


def _off_norm(a: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part, summed directly from the upper triangle."""
    return float(math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2))))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    apq = float(a[p, q])
    theta = (float(a[q, q]) - float(a[p, p])) / (2.0 * apq)
    sign = 1.0 if theta >= 0 else -1.0
    t = sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = DEFAULT_TOLERANCE,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> np.ndarray:
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Args:
        matrix: Square symmetric matrix (copied, not modified)
        tol: Target off-diagonal Frobenius norm (> 0)
        max_sweeps: Sweep cap before giving up

    Returns:
        Ascending eigenvalues

    Raises:
        ValueError: If tol is not positive or the matrix is not square
        ConvergenceError: If the cap is reached first
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]

    sweeps = 0
    off = _off_norm(a)
    while off >= tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, off, tol)
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, p, q)
        sweeps += 1
        off = _off_norm(a)

    logger.debug(f"Jacobi converged on n={n} in {sweeps} sweeps (off-norm {off:.2e})")
    return np.sort(np.diag(a))


def eigenvalues_dense(
    graph: Graph,
    tol: float = DEFAULT_TOLERANCE,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> Spectrum:
    """
    Floating-point Laplacian spectrum of a small graph.

    Raises:
        DenseCapExceededError: If n exceeds dense_cap
        ConvergenceError: If Jacobi iteration does not converge
    """
    if graph.n > dense_cap:
        raise DenseCapExceededError(graph.n, dense_cap)
    values = jacobi_eigenvalues(laplacian(graph), tol=tol, max_sweeps=max_sweeps)
    return Spectrum(values=tuple(float(v) for v in values), tolerance=tol)


def guarded_count_below(
    spectrum: Spectrum,
    alpha: Fraction | float,
    guard: float = DEFAULT_THRESHOLD_GUARD,
) -> int | None:
    """
    Dense count of eigenvalues below alpha, or None when one sits within
    `guard` of alpha and the floating answer cannot be trusted.
    """
    threshold = float(alpha)
    if any(abs(v - threshold) < guard for v in spectrum.values):
        return None
    return spectrum.count_below(threshold)
