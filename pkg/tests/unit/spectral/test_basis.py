"""
Unit Tests for the Graph Fourier Basis

Tests eigendecomposition, sign convention and the GFT pair.
"""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from core.exceptions import DimensionMismatchError
from graphss.graph import OperatorKind, build_graph, laplacian
from graphss.spectral import SpectralBasis, eigendecompose, gft, igft, normalize_signs


@pytest.mark.unit
class TestEigendecompose:
    """Test ascending, orthonormal, sign-normalized bases"""

    def test_path2_combinatorial(self, path2):
        basis = eigendecompose(laplacian(path2, OperatorKind.COMBINATORIAL))
        np.testing.assert_allclose(basis.lam, [0.0, 2.0], atol=1e-14)
        np.testing.assert_allclose(np.abs(basis.u), np.full((2, 2), 1 / np.sqrt(2)))

    def test_complete_bipartite_k22_normalized(self):
        g = build_graph(4, [(0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (1, 3, 1.0)])
        basis = eigendecompose(laplacian(g, OperatorKind.NORMALIZED))
        np.testing.assert_allclose(basis.lam, [0.0, 1.0, 1.0, 2.0], atol=1e-12)
        np.testing.assert_allclose(basis.u.T @ basis.u, np.eye(4), atol=1e-12)

    def test_orthonormal_and_ascending(self, sensor_basis):
        n = sensor_basis.n
        np.testing.assert_allclose(sensor_basis.u.T @ sensor_basis.u, np.eye(n), atol=1e-10)
        assert np.all(np.diff(sensor_basis.lam) >= 0)
        assert sensor_basis.lam[0] == pytest.approx(0.0, abs=1e-10)

    def test_diagonalizes_operator(self, sensor100, sensor_basis):
        values = laplacian(sensor100, OperatorKind.COMBINATORIAL).values
        reconstructed = sensor_basis.u @ np.diag(sensor_basis.lam) @ sensor_basis.u.T
        np.testing.assert_allclose(reconstructed, values, atol=1e-9)

    def test_largest_entry_of_each_column_is_positive(self, sensor_basis):
        u = sensor_basis.u
        pivots = np.argmax(np.abs(u), axis=0)
        assert np.all(u[pivots, np.arange(u.shape[1])] > 0)

    def test_repeatable(self, sensor100):
        op = laplacian(sensor100, OperatorKind.NORMALIZED)
        np.testing.assert_array_equal(eigendecompose(op).u, eigendecompose(op).u)

    def test_normalized_spectrum_within_zero_two(self, sensor_basis_normalized):
        assert sensor_basis_normalized.lam[0] > -1e-10
        assert sensor_basis_normalized.lam_max < 2.0 + 1e-10
        assert sensor_basis_normalized.kind is OperatorKind.NORMALIZED

    def test_basis_arrays_are_read_only(self, sensor_basis):
        with pytest.raises(ValueError):
            sensor_basis.lam[0] = 1.0

    def test_flipped_lam(self, path3):
        basis = eigendecompose(laplacian(path3, OperatorKind.COMBINATORIAL))
        np.testing.assert_array_equal(basis.flipped_lam, basis.lam[::-1])


@pytest.mark.unit
class TestNormalizeSigns:

    def test_flip(self):
        u = np.array([[-0.8, 0.6], [0.6, 0.8]])
        np.testing.assert_array_equal(normalize_signs(u), [[0.8, 0.6], [-0.6, 0.8]])

    def test_tie_goes_to_first_row(self):
        u = np.array([[-1.0], [1.0]]) / np.sqrt(2)
        assert normalize_signs(u)[0, 0] > 0


@pytest.mark.unit
class TestGft:
    """Test the transform pair"""

    def test_constant_signal_on_combinatorial_basis(self, sensor_basis):
        f = np.ones(sensor_basis.n)
        ftilde = gft(sensor_basis, f)
        assert abs(ftilde[0]) == pytest.approx(np.sqrt(sensor_basis.n), rel=1e-10)
        np.testing.assert_allclose(ftilde[1:], 0.0, atol=1e-9)

    def test_wrong_length(self, sensor_basis):
        with pytest.raises(DimensionMismatchError):
            gft(sensor_basis, np.ones(3))
        with pytest.raises(DimensionMismatchError):
            igft(sensor_basis, np.ones(3))

    def test_batch_columns(self, sensor_basis, rng):
        batch = rng.standard_normal((sensor_basis.n, 3))
        np.testing.assert_allclose(gft(sensor_basis, batch)[:, 1], gft(sensor_basis, batch[:, 1]), atol=1e-12)

    def test_method_aliases(self, sensor_basis, rng):
        f = rng.standard_normal(sensor_basis.n)
        np.testing.assert_array_equal(sensor_basis.gft(f), gft(sensor_basis, f))

    def test_mismatched_basis_shapes(self):
        with pytest.raises(DimensionMismatchError):
            SpectralBasis(u=np.eye(3), lam=np.zeros(2), kind=OperatorKind.COMBINATORIAL)

    @hyp_settings(max_examples=25)
    @given(f=arrays(np.float64, 64, elements=st.floats(-1e3, 1e3)))
    def test_parseval_and_inverse(self, sensor64_basis, f):
        """Property: the GFT is an isometry and igft inverts it"""
        ftilde = gft(sensor64_basis, f)
        assert np.linalg.norm(ftilde) == pytest.approx(np.linalg.norm(f), rel=1e-9, abs=1e-9)
        np.testing.assert_allclose(igft(sensor64_basis, ftilde), f, atol=1e-9 * max(1.0, np.abs(f).max()))
