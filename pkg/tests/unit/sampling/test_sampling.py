"""
Unit Tests for Sampling Primitives

Tests spectral folding/unfolding and vertex selection.
"""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from core.exceptions import ConfigurationError, IndexOutOfRangeError, LengthMismatchError, OddLengthError
from graphss.sampling import (
    SamplingChannel,
    spectral_downsample,
    spectral_sampling_matrix,
    spectral_upsample,
    vertex_downsample,
    vertex_sampling_matrix,
    vertex_upsample,
)

LOW, HIGH = SamplingChannel.LOW, SamplingChannel.HIGH

even_vectors = st.integers(min_value=1, max_value=32).flatmap(
    lambda half: arrays(np.float64, 2 * half, elements=st.floats(-1e6, 1e6))
)


@pytest.mark.unit
class TestSpectralSampling:
    """Test the folding operators"""

    def test_downsample_examples(self):
        x = np.array([1.0, 2.0, 3.0, 4.0])
        np.testing.assert_array_equal(spectral_downsample(x, LOW), [5.0, 5.0])
        np.testing.assert_array_equal(spectral_downsample(x, HIGH), [-3.0, -1.0])

    def test_upsample_examples(self):
        x = np.array([1.0, 2.0])
        np.testing.assert_array_equal(spectral_upsample(x, LOW), [1.0, 2.0, 2.0, 1.0])
        np.testing.assert_array_equal(spectral_upsample(x, HIGH), [1.0, 2.0, -2.0, -1.0])

    def test_odd_length_rejected(self):
        with pytest.raises(OddLengthError) as exc_info:
            spectral_downsample(np.ones(5), LOW)
        assert exc_info.value.length == 5

    def test_channel_accepts_string(self):
        np.testing.assert_array_equal(spectral_downsample(np.array([1.0, 3.0]), "high"), [-2.0])

    def test_matrix_form(self):
        m = spectral_sampling_matrix(4, HIGH)
        np.testing.assert_array_equal(m, [[1, 0, 0, -1], [0, 1, -1, 0]])

    def test_batch_along_axis_zero(self):
        x = np.arange(8.0).reshape(4, 2)
        np.testing.assert_array_equal(spectral_downsample(x, LOW)[:, 1], spectral_downsample(x[:, 1], LOW))

    @hyp_settings(max_examples=50)
    @given(x=even_vectors)
    def test_folds_sum_to_identity(self, x):
        """Property: S_u0 S_d0 + S_u1 S_d1 = 2I"""
        total = spectral_upsample(spectral_downsample(x, LOW), LOW) + spectral_upsample(
            spectral_downsample(x, HIGH), HIGH
        )
        np.testing.assert_allclose(total, 2.0 * x, rtol=1e-12, atol=1e-6)

    @hyp_settings(max_examples=50)
    @given(x=even_vectors)
    def test_down_after_up(self, x):
        """Property: S_d S_u = 2I on the half-length space"""
        half = x[: x.size // 2]
        for ch in (LOW, HIGH):
            np.testing.assert_allclose(spectral_downsample(spectral_upsample(half, ch), ch), 2.0 * half)

    def test_fold_is_linear(self, rng):
        a, b = rng.standard_normal(10), rng.standard_normal(10)
        np.testing.assert_allclose(
            spectral_downsample(2.0 * a - b, LOW),
            2.0 * spectral_downsample(a, LOW) - spectral_downsample(b, LOW),
            atol=1e-12,
        )


@pytest.mark.unit
class TestVertexSampling:
    """Test selection and zero-filling"""

    def test_downsample(self):
        np.testing.assert_array_equal(vertex_downsample(np.array([5.0, 6.0, 7.0]), [2, 0]), [7.0, 5.0])

    def test_upsample(self):
        np.testing.assert_array_equal(vertex_upsample(np.array([7.0, 5.0]), [2, 0], 4), [5.0, 0.0, 7.0, 0.0])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            vertex_downsample(np.ones(3), [3])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            vertex_upsample(np.ones(3), [0, 1], 4)

    def test_duplicates_rejected(self):
        with pytest.raises(ConfigurationError):
            vertex_downsample(np.ones(3), [1, 1])

    def test_selection_matrix(self):
        m = vertex_sampling_matrix([1, 3], 4)
        np.testing.assert_array_equal(m, [[0, 1, 0, 0], [0, 0, 0, 1]])
        np.testing.assert_array_equal(m @ m.T, np.eye(2))
