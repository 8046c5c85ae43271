"""
Spectree Spectral Module

Laplacian matrices, exact eigenvalue-interval counting by inertia, a dense
Jacobi eigensolver for cross-validation and the M_n determinant.
"""

from .dense import (
    ConvergenceError,
    DenseCapExceededError,
    Spectrum,
    eigenvalues_dense,
    guarded_count_below,
)
from .detm import build_M, det_M, det_M_closed_form, exact_determinant
from .inertia import InertiaTriple, inertia_at, m_below_one, m_interval
from .laplacian import laplacian
from .rational import (
    IntervalError,
    IntervalSpec,
    RationalParseError,
    parse_interval,
    parse_rational,
)

__all__ = [
    "laplacian",
    "InertiaTriple",
    "inertia_at",
    "m_interval",
    "m_below_one",
    "Spectrum",
    "eigenvalues_dense",
    "guarded_count_below",
    "det_M",
    "det_M_closed_form",
    "build_M",
    "exact_determinant",
    "IntervalSpec",
    "parse_interval",
    "parse_rational",
    # Errors
    "IntervalError",
    "RationalParseError",
    "DenseCapExceededError",
    "ConvergenceError",
]
