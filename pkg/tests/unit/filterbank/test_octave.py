"""
Unit Tests for the Octave Cascade

Tests multi-level PR, the pyramid container and the stacked analysis operator.
"""

import numpy as np
import pytest

from core.exceptions import DepthTooLargeError, DimensionMismatchError, GraphSSError
from graphss.filterbank import (
    Subband,
    SubbandPyramid,
    analysis_matrix,
    analyze_octave,
    band_ids,
    synthesize_octave,
)
from graphss.filters import FilterDesign, design_octave


@pytest.mark.unit
class TestCascade:
    """Test analyze/synthesize over several levels"""

    @pytest.mark.parametrize("levels", [1, 2, 3])
    @pytest.mark.parametrize("design", list(FilterDesign))
    def test_perfect_reconstruction(self, sensor64_basis, rng, design, levels):
        specs = design_octave(design, 64, levels)
        f = rng.standard_normal(64)
        pyramid = analyze_octave(sensor64_basis, specs, f)
        assert pyramid.band_ids == band_ids(levels)
        assert pyramid.coefficient_count == 64
        np.testing.assert_allclose(synthesize_octave(sensor64_basis, specs, pyramid), f, atol=1e-9)

    def test_band_lengths(self, sensor64_basis, rng):
        pyramid = analyze_octave(sensor64_basis, design_octave(FilterDesign.MEYER, 64, 3), rng.standard_normal(64))
        assert [b.values.size for b in pyramid.bands] == [32, 16, 8, 8]
        assert pyramid.lowpass.band_id == "LLL"

    def test_depth_too_large(self, sensor_basis):
        specs = design_octave(FilterDesign.IDEAL, 100, 2)
        with pytest.raises(DepthTooLargeError):
            analyze_octave(sensor_basis, specs, np.zeros(100), levels=3)

    def test_meyer_analysis_is_orthogonal(self, sensor64_basis):
        a = analysis_matrix(sensor64_basis, design_octave(FilterDesign.MEYER, 64, 2))
        np.testing.assert_allclose(a @ a.T, np.eye(64), atol=1e-10)


@pytest.mark.unit
class TestSubbandPyramid:
    """Test layout checks and serialization"""

    def test_band_ids(self):
        assert band_ids(1) == ["H", "L"]
        assert band_ids(3) == ["H", "LH", "LLH", "LLL"]

    def test_json_round_trip(self, sensor64_basis, rng):
        pyramid = analyze_octave(sensor64_basis, design_octave(FilterDesign.CDF97, 64, 2), rng.standard_normal(64))
        restored = SubbandPyramid.from_json(pyramid.to_json(meta={"design": "cdf97"}))
        assert restored.band_ids == pyramid.band_ids
        np.testing.assert_array_equal(restored.to_vector(), pyramid.to_vector())

    def test_meta_is_serialized(self):
        pyramid = SubbandPyramid(2, 1, (Subband("H", np.array([1.0])), Subband("L", np.array([2.0]))))
        assert pyramid.to_dict(meta={"seed": 4})["meta"] == {"seed": 4}
        assert "meta" not in pyramid.to_dict()

    def test_with_vector_keeps_layout(self):
        pyramid = SubbandPyramid(4, 1, (Subband("H", np.zeros(2)), Subband("L", np.zeros(2))))
        changed = pyramid.with_vector(np.array([1.0, 2.0, 3.0, 4.0]))
        np.testing.assert_array_equal(changed.band("L").values, [3.0, 4.0])
        with pytest.raises(DimensionMismatchError):
            pyramid.with_vector(np.zeros(3))

    def test_bad_layout(self):
        with pytest.raises(GraphSSError):
            SubbandPyramid(4, 1, (Subband("L", np.zeros(2)), Subband("H", np.zeros(2))))
        with pytest.raises(DimensionMismatchError):
            SubbandPyramid(4, 1, (Subband("H", np.zeros(3)), Subband("L", np.zeros(2))))

    def test_malformed_payload(self):
        with pytest.raises(GraphSSError):
            SubbandPyramid.from_dict({"n": 2, "levels": 1})

    def test_unknown_band(self):
        pyramid = SubbandPyramid(2, 1, (Subband("H", np.zeros(1)), Subband("L", np.zeros(1))))
        with pytest.raises(KeyError):
            pyramid.band("LH")
