"""
Octave-band cascade.

The low band of each level is split again. Every level works on spectral
indices directly: the inverse GFT of one level and the GFT of the next cancel,
so no intermediate reduced-graph basis is needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import DepthTooLargeError, DimensionMismatchError, GraphSSError
from graphss.filterbank.transform import merge_spectrum, split_spectrum
from graphss.filters.designs import FilterBankSpec
from graphss.spectral.basis import SpectralBasis, gft, igft


def band_ids(levels: int) -> List[str]:
    """["H", "LH", ..., "L"*(levels-1)+"H", "L"*levels]"""
    return ["L" * k + "H" for k in range(levels)] + ["L" * levels]


def check_depth(n: int, levels: int) -> None:
    """Every level length n/2^k, k < levels, must be even"""
    if levels < 1:
        raise DepthTooLargeError(n, levels)
    length = n
    for _ in range(levels):
        if length < 2 or length % 2:
            raise DepthTooLargeError(n, levels)
        length //= 2


@dataclass(frozen=True, eq=False)
class Subband:
    band_id: str
    values: np.ndarray

    @property
    def depth(self) -> int:
        return len(self.band_id)


@dataclass(frozen=True, eq=False)
class SubbandPyramid:
    """
    Output of an L-level octave analysis.

    Bands are ordered finest first: H, LH, ..., then the deepest low band.
    """
    n: int
    levels: int
    bands: Tuple[Subband, ...]

    def __post_init__(self) -> None:
        ids = [b.band_id for b in self.bands]
        if ids != band_ids(self.levels):
            raise GraphSSError(f"unexpected band layout {ids}")
        for band in self.bands:
            expected = self.n >> band.depth
            if band.values.shape[0] != expected:
                raise DimensionMismatchError(expected, band.values.shape[0], what=f"band {band.band_id}")
        if self.coefficient_count != self.n:
            raise DimensionMismatchError(self.n, self.coefficient_count, what="pyramid")

    @property
    def coefficient_count(self) -> int:
        return sum(b.values.shape[0] for b in self.bands)

    @property
    def band_ids(self) -> List[str]:
        return [b.band_id for b in self.bands]

    @property
    def lowpass(self) -> Subband:
        return self.bands[-1]

    def band(self, band_id: str) -> Subband:
        for b in self.bands:
            if b.band_id == band_id:
                return b
        raise KeyError(band_id)

    def to_vector(self) -> np.ndarray:
        return np.concatenate([b.values for b in self.bands])

    def with_vector(self, values: np.ndarray) -> "SubbandPyramid":
        """Same layout, coefficients taken in order from ``values``"""
        values = np.asarray(values, dtype=float)
        if values.shape != (self.n,):
            raise DimensionMismatchError(self.n, values.shape[0], what="coefficient vector")
        bands, start = [], 0
        for b in self.bands:
            stop = start + b.values.shape[0]
            bands.append(Subband(b.band_id, values[start:stop].copy()))
            start = stop
        return SubbandPyramid(self.n, self.levels, tuple(bands))

    # ------------------------------------------------------------------
    # serialization: {n, levels, bands: [{id, values}], meta?}
    # ------------------------------------------------------------------

    def to_dict(self, meta: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "n": self.n,
            "levels": self.levels,
            "bands": [{"id": b.band_id, "values": [float(v) for v in b.values]} for b in self.bands],
        }
        if meta:
            payload["meta"] = meta
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "SubbandPyramid":
        try:
            bands = tuple(Subband(str(b["id"]), np.asarray(b["values"], dtype=float)) for b in payload["bands"])
            return cls(int(payload["n"]), int(payload["levels"]), bands)
        except (KeyError, TypeError) as exc:
            raise GraphSSError(f"malformed pyramid: {exc}") from exc

    def to_json(self, meta: Optional[Dict[str, Any]] = None) -> str:
        # float repr is shortest round-trip, so values survive exactly
        return json.dumps(self.to_dict(meta))

    @classmethod
    def from_json(cls, text: str) -> "SubbandPyramid":
        return cls.from_dict(json.loads(text))


def _check_specs(n: int, specs: Sequence[FilterBankSpec], levels: int) -> None:
    check_depth(n, levels)
    if len(specs) < levels:
        raise DimensionMismatchError(levels, len(specs), what="per-level spec list")
    for k in range(levels):
        expected = n >> k
        if specs[k].n != expected:
            raise DimensionMismatchError(expected, specs[k].n, what=f"level {k} spec")


def cascade_analysis(specs: Sequence[FilterBankSpec], xtilde: np.ndarray, levels: int) -> List[np.ndarray]:
    """Band arrays (finest first) from spectral coefficients; 2-D input is a batch"""
    xtilde = np.asarray(xtilde, dtype=float)
    _check_specs(xtilde.shape[0], specs, levels)
    out = []
    x = xtilde
    for k in range(levels):
        x, high = split_spectrum(specs[k], x)
        out.append(high)
    out.append(x)
    return out


def cascade_synthesis(specs: Sequence[FilterBankSpec], bands: Sequence[np.ndarray], levels: int) -> np.ndarray:
    x = np.asarray(bands[-1], dtype=float)
    for k in reversed(range(levels)):
        x = merge_spectrum(specs[k], x, bands[k])
    return x


def analyze_octave(
    basis: SpectralBasis, specs: Sequence[FilterBankSpec], f: np.ndarray, levels: Optional[int] = None
) -> SubbandPyramid:
    """
    L-level octave analysis.

    Raises:
        DepthTooLargeError: N/2^k odd before level L
    """
    levels = len(specs) if levels is None else levels
    arrays = cascade_analysis(specs, gft(basis, f), levels)
    bands = tuple(Subband(bid, arr) for bid, arr in zip(band_ids(levels), arrays))
    return SubbandPyramid(basis.n, levels, bands)


def synthesize_octave(basis: SpectralBasis, specs: Sequence[FilterBankSpec], pyramid: SubbandPyramid) -> np.ndarray:
    """Inverse of ``analyze_octave``"""
    _check_specs(basis.n, specs, pyramid.levels)
    if pyramid.n != basis.n:
        raise DimensionMismatchError(basis.n, pyramid.n, what="pyramid")
    xtilde = cascade_synthesis(specs, [b.values for b in pyramid.bands], pyramid.levels)
    return igft(basis, xtilde)


def analysis_matrix(basis: SpectralBasis, specs: Sequence[FilterBankSpec], levels: Optional[int] = None) -> np.ndarray:
    """Stacked N x N analysis operator; rows follow the pyramid band order"""
    levels = len(specs) if levels is None else levels
    return np.vstack(cascade_analysis(specs, basis.u.T, levels))
