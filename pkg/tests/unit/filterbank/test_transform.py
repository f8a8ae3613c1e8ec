"""
Unit Tests for the One-Level Transform
"""

import numpy as np
import pytest

from core.exceptions import DimensionMismatchError
from graphss.filterbank import (
    analyze_one_level,
    merge_spectrum,
    split_spectrum,
    synthesize_one_level,
    transfer_matrix,
)
from graphss.filters import FilterDesign, design_filter_bank, ideal_design, meyer_orthogonal_design


@pytest.mark.unit
class TestTransferMatrix:
    """Test T = c^2 I for PR specs"""

    @pytest.mark.parametrize("design", list(FilterDesign))
    def test_pr_specs(self, design):
        spec = design_filter_bank(design, 32)
        np.testing.assert_allclose(transfer_matrix(spec), spec.c2 * np.eye(32), atol=1e-9)

    def test_perturbed_spec_breaks_identity(self):
        spec = meyer_orthogonal_design(32)
        g0 = spec.g0.copy()
        g0[5] += 0.1
        residual = np.max(np.abs(transfer_matrix(spec.replace(g0=g0)) - np.eye(32)))
        assert residual >= 1e-2


@pytest.mark.unit
class TestOneLevel:
    """Test analysis/synthesis on a sensor graph"""

    @pytest.mark.parametrize("design", list(FilterDesign))
    def test_perfect_reconstruction(self, sensor_basis, rng, design):
        spec = design_filter_bank(design, sensor_basis.n)
        f = rng.standard_normal(sensor_basis.n)
        low, high = analyze_one_level(sensor_basis, spec, f)
        assert low.shape == high.shape == (50,)
        np.testing.assert_allclose(synthesize_one_level(sensor_basis, spec, low, high), f, atol=1e-9)

    def test_ideal_split_on_spectrum(self):
        spec = ideal_design(4)
        low, high = split_spectrum(spec, np.array([1.0, 2.0, 3.0, 4.0]))
        np.testing.assert_array_equal(low, [1.0, 2.0])
        np.testing.assert_array_equal(high, [-4.0, -3.0])
        np.testing.assert_array_equal(merge_spectrum(spec, low, high), [1.0, 2.0, 3.0, 4.0])

    def test_batch_columns(self, rng):
        spec = meyer_orthogonal_design(8)
        x = rng.standard_normal((8, 3))
        low, _ = split_spectrum(spec, x)
        np.testing.assert_allclose(low[:, 2], split_spectrum(spec, x[:, 2])[0])

    def test_wrong_spec_length(self, sensor_basis):
        with pytest.raises(DimensionMismatchError):
            analyze_one_level(sensor_basis, ideal_design(8), np.zeros(sensor_basis.n))

    def test_wrong_subband_length(self):
        with pytest.raises(DimensionMismatchError):
            merge_spectrum(ideal_design(8), np.zeros(4), np.zeros(3))
