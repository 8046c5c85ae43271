"""
Tests for the Jacobi eigensolver and dense spectra.
"""

import math
import random

import numpy as np
import pytest

from src.core.errors import CapExceededError
from src.enumeration.connected import connected_graphs
from src.families.constructors import path, star
from src.families.random_trees import random_tree
from src.graph.core import from_edge_list
from src.spectral.dense import (
    ConvergenceError,
    DenseCapExceededError,
    Spectrum,
    _off_norm,
    eigenvalues_dense,
    guarded_count_below,
    jacobi_eigenvalues,
)
from src.spectral.laplacian import laplacian


class TestJacobi:
    """Tests for jacobi_eigenvalues."""

    def test_diagonal_matrix(self):
        """Test that a diagonal matrix needs no rotation."""
        values = jacobi_eigenvalues(np.diag([3.0, 1.0, 2.0]))

        assert list(values) == [1.0, 2.0, 3.0]

    def test_two_by_two(self):
        """Test [[2, 1], [1, 2]] has eigenvalues 1 and 3."""
        values = jacobi_eigenvalues(np.array([[2.0, 1.0], [1.0, 2.0]]))

        assert values == pytest.approx([1.0, 3.0], abs=1e-12)

    def test_matches_numpy(self):
        """Test against numpy.linalg.eigvalsh on random symmetric matrices."""
        rng = np.random.default_rng(0)
        for size in (3, 7, 15):
            a = rng.normal(size=(size, size))
            a = a + a.T
            assert jacobi_eigenvalues(a) == pytest.approx(np.linalg.eigvalsh(a), abs=1e-8)

    def test_off_norm_of_diagonal_is_zero(self):
        """Test that a diagonal matrix with large entries has off-diagonal norm exactly 0."""
        a = np.diag([1e8, 3.7, 0.1, 2.0 / 3.0])

        assert _off_norm(a) == 0.0

    def test_off_norm_ignores_diagonal(self):
        """Test that only the off-diagonal entries contribute."""
        a = np.array([[1e6, 3.0, 0.0], [3.0, 7.0, 4.0], [0.0, 4.0, 1e-3]])

        assert _off_norm(a) == pytest.approx(math.sqrt(50.0))

    def test_input_not_modified(self):
        """Test that the caller's matrix is copied."""
        a = np.array([[2.0, 1.0], [1.0, 2.0]])
        jacobi_eigenvalues(a)

        assert a[0, 1] == 1.0

    def test_convergence_error(self):
        """Test that a sweep cap of zero on a non-diagonal matrix raises."""
        with pytest.raises(ConvergenceError, match="did not converge after 0 sweeps") as exc_info:
            jacobi_eigenvalues(np.array([[2.0, 1.0], [1.0, 2.0]]), max_sweeps=0)

        assert exc_info.value.sweeps == 0
        assert exc_info.value.off_norm > 0

    def test_invalid_arguments(self):
        """Test that a non-positive tolerance or non-square input raises ValueError."""
        with pytest.raises(ValueError, match="tolerance must be positive"):
            jacobi_eigenvalues(np.eye(2), tol=0)
        with pytest.raises(ValueError, match="square"):
            jacobi_eigenvalues(np.ones((2, 3)))


class TestEigenvaluesDense:
    """Tests for eigenvalues_dense and Spectrum."""

    def test_star_spectrum(self):
        """Test that K_{1,11} has spectrum 0, 1 x10, 12."""
        spectrum = eigenvalues_dense(star(12))

        assert spectrum.values == pytest.approx([0.0] + [1.0] * 10 + [12.0], abs=1e-9)
        assert len(spectrum) == 12

    def test_path_cosine_formula(self):
        """Test that P_n eigenvalues are 2 - 2cos(pi*k/n)."""
        n = 10
        expected = sorted(2 - 2 * math.cos(math.pi * k / n) for k in range(n))

        assert eigenvalues_dense(path(n)).values == pytest.approx(expected, abs=1e-9)

    def test_trace_and_zero(self):
        """Test that eigenvalues sum to 2m and the smallest is 0 on random trees."""
        rng = random.Random(2)
        for _ in range(10):
            tree = random_tree(rng.randint(2, 25), rng)
            spectrum = eigenvalues_dense(tree)
            assert sum(spectrum.values) == pytest.approx(2 * tree.m, abs=1e-8)
            assert spectrum.values[0] == pytest.approx(0.0, abs=1e-9)

    def test_all_connected_graphs_of_order_6(self):
        """Test that Jacobi converges on every connected graph of order 6 and matches numpy."""
        for graph in connected_graphs(6):
            spectrum = eigenvalues_dense(graph)
            expected = np.linalg.eigvalsh(laplacian(graph).astype(float))
            assert spectrum.values == pytest.approx(expected.tolist(), abs=1e-8)
            assert sum(spectrum.values) == pytest.approx(2 * graph.m, abs=1e-8)

    def test_dense_cap(self):
        """Test that a graph larger than the cap raises DenseCapExceededError."""
        with pytest.raises(DenseCapExceededError, match="exceeds cap 4") as exc_info:
            eigenvalues_dense(path(5), dense_cap=4)

        assert isinstance(exc_info.value, CapExceededError)
        assert exc_info.value.requested == 5

    def test_rounded_is_descending(self):
        """Test that rounded() sorts descending and folds -0.0."""
        spectrum = Spectrum(values=(-1e-12, 0.26794919, 3.7320508), tolerance=1e-10)

        rounded = spectrum.rounded(3)
        assert rounded == [3.732, 0.268, 0.0]
        assert math.copysign(1.0, rounded[-1]) == 1.0

    def test_edgeless_graph(self):
        """Test that an edgeless graph has all-zero spectrum."""
        assert eigenvalues_dense(from_edge_list(3, [])).values == (0.0, 0.0, 0.0)


class TestGuardedCount:
    """Tests for guarded_count_below."""

    def test_clear_threshold(self):
        """Test a threshold far from every eigenvalue."""
        assert guarded_count_below(eigenvalues_dense(star(12)), 0.5) == 1

    def test_near_threshold_is_none(self):
        """Test that an eigenvalue at the threshold makes the count ambiguous."""
        assert guarded_count_below(eigenvalues_dense(star(12)), 1) is None

    def test_guard_width(self):
        """Test that the guard width controls ambiguity."""
        spectrum = Spectrum(values=(0.0, 0.9999, 2.0), tolerance=1e-10)

        assert guarded_count_below(spectrum, 1, guard=1e-6) == 2
        assert guarded_count_below(spectrum, 1, guard=1e-3) is None
