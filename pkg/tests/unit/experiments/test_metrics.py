"""
Unit Tests for Noise and SNR
"""

import math

import numpy as np
import pytest

from core.exceptions import ConfigurationError, DimensionMismatchError, ZeroReferenceError
from graphss.experiments import add_noise, snr_db


@pytest.mark.unit
class TestSnr:

    def test_twenty_db(self):
        assert snr_db(np.array([1.0, 0.0]), np.array([0.9, 0.0])) == pytest.approx(20.0, abs=1e-9)

    def test_exact_estimate_is_infinite(self):
        assert math.isinf(snr_db(np.array([1.0, 2.0]), np.array([1.0, 2.0])))

    def test_zero_reference(self):
        with pytest.raises(ZeroReferenceError):
            snr_db(np.zeros(3), np.ones(3))

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            snr_db(np.ones(3), np.ones(4))


@pytest.mark.unit
class TestAddNoise:

    def test_seeded(self):
        f = np.zeros(1000)
        np.testing.assert_array_equal(add_noise(f, 0.5, 7), add_noise(f, 0.5, 7))
        assert np.std(add_noise(f, 0.5, 7)) == pytest.approx(0.5, rel=0.1)

    def test_zero_sigma_copies(self):
        f = np.arange(3.0)
        out = add_noise(f, 0.0, 1)
        np.testing.assert_array_equal(out, f)
        assert out is not f

    def test_negative_sigma(self):
        with pytest.raises(ConfigurationError):
            add_noise(np.zeros(3), -0.1, 1)

    def test_sample_variance(self):
        noise = add_noise(np.zeros(100_000), 0.3, 11)
        assert np.var(noise) == pytest.approx(0.09, rel=0.02)
        assert abs(np.mean(noise)) < 0.01
