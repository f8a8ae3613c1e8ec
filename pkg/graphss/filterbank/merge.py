"""
Merged octave operators.

Filtering after a fold equals folding after filtering with the lifted gains
[h, flip(h)], so the whole path to each band collapses into one diagonal
gain on the N input coefficients followed by one composed fold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from graphss.filterbank.octave import SubbandPyramid, Subband, _check_specs, band_ids
from graphss.filters.designs import FilterBankSpec
from graphss.spectral.basis import SpectralBasis, gft


def lift_gains(gains: np.ndarray, times: int) -> np.ndarray:
    """Apply v -> [v, flip(v)] ``times`` times"""
    lifted = np.asarray(gains, dtype=float)
    for _ in range(times):
        lifted = np.concatenate([lifted, lifted[::-1]])
    return lifted


def _fold_map(n: int, depth: int, high_last: bool) -> Tuple[np.ndarray, np.ndarray]:
    position = np.arange(n)
    sign = np.ones(n)
    length = n
    for step in range(depth):
        upper = position >= length // 2
        position = np.where(upper, length - 1 - position, position)
        if high_last and step == depth - 1:
            sign = np.where(upper, -sign, sign)
        length //= 2
    return position, sign


@dataclass(frozen=True, eq=False)
class MergedBand:
    band_id: str
    gains: np.ndarray    # length N
    targets: np.ndarray  # output index per input index
    signs: np.ndarray    # +-1 per input index
    length: int

    def apply(self, xtilde: np.ndarray) -> np.ndarray:
        weights = self.signs * self.gains * xtilde
        return np.bincount(self.targets, weights=weights, minlength=self.length)

    def matrix(self) -> np.ndarray:
        out = np.zeros((self.length, self.gains.size))
        out[self.targets, np.arange(self.gains.size)] = self.signs * self.gains
        return out


@dataclass(frozen=True, eq=False)
class MergedBandOperator:
    n: int
    levels: int
    bands: Tuple[MergedBand, ...]

    def band(self, band_id: str) -> MergedBand:
        for b in self.bands:
            if b.band_id == band_id:
                return b
        raise KeyError(band_id)

    def apply(self, xtilde: np.ndarray) -> List[np.ndarray]:
        return [b.apply(xtilde) for b in self.bands]

    def analyze(self, basis: SpectralBasis, f: np.ndarray) -> SubbandPyramid:
        values = self.apply(gft(basis, f))
        return SubbandPyramid(self.n, self.levels, tuple(Subband(b.band_id, v) for b, v in zip(self.bands, values)))

    def gains(self) -> Dict[str, np.ndarray]:
        return {b.band_id: b.gains for b in self.bands}


def merge_octave(specs: Sequence[FilterBankSpec], levels: int) -> MergedBandOperator:
    """
    Collapse an L-level cascade into one gain + fold per band.

    Raises:
        DepthTooLargeError: as ``analyze_octave``
    """
    n = specs[0].n
    _check_specs(n, specs, levels)

    lowpass_chain = np.ones(n)
    merged = []
    for k, band_id in enumerate(band_ids(levels)):
        if k < levels:
            gains = lowpass_chain * lift_gains(specs[k].h1, k)
            targets, signs = _fold_map(n, k + 1, high_last=True)
            merged.append(MergedBand(band_id, gains, targets, signs, n >> (k + 1)))
            lowpass_chain = lowpass_chain * lift_gains(specs[k].h0, k)
        else:
            targets, signs = _fold_map(n, levels, high_last=False)
            merged.append(MergedBand(band_id, lowpass_chain, targets, signs, n >> levels))

    return MergedBandOperator(n, levels, tuple(merged))


def merged_lowpass_gains(specs: Sequence[FilterBankSpec], levels: int) -> np.ndarray:
    """Length-N merged gain of the deepest low band"""
    return merge_octave(specs, levels).bands[-1].gains
