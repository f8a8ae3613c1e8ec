"""
Sampling primitives.

Vertex-domain sampling keeps or places samples on a vertex subset.
Spectral-domain sampling folds the flipped upper half of a spectrum onto the
lower half (down) or mirrors it back out (up); the high channel is the
modulated version, with the flipped half negated.

All operators act along axis 0, so a 2-D array is a batch of column vectors.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np

from core.exceptions import ConfigurationError, IndexOutOfRangeError, LengthMismatchError, OddLengthError


class SamplingChannel(str, Enum):
    LOW = "low"
    HIGH = "high"

    @property
    def sign(self) -> float:
        return 1.0 if self is SamplingChannel.LOW else -1.0


def spectral_downsample(x: np.ndarray, ch: SamplingChannel) -> np.ndarray:
    """
    y[i] = x[i] + x[M-1-i] (low) or x[i] - x[M-1-i] (high), i < M/2.

    Raises:
        OddLengthError: M is odd
    """
    x = np.asarray(x, dtype=float)
    m = x.shape[0]
    if m % 2:
        raise OddLengthError(m)
    half = m // 2
    return x[:half] + SamplingChannel(ch).sign * x[::-1][:half]


def spectral_upsample(x: np.ndarray, ch: SamplingChannel) -> np.ndarray:
    """y = [x; flip(x)] (low) or [x; -flip(x)] (high)"""
    x = np.asarray(x, dtype=float)
    return np.concatenate([x, SamplingChannel(ch).sign * x[::-1]], axis=0)


def _check_indices(keep: Sequence[int], bound: int) -> np.ndarray:
    idx = np.asarray(keep, dtype=int).reshape(-1)
    for i in idx:
        if not 0 <= i < bound:
            raise IndexOutOfRangeError(int(i), bound)
    if np.unique(idx).size != idx.size:
        raise ConfigurationError("sampling indices must be distinct", keep=idx.tolist())
    return idx


def vertex_downsample(f: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """f_d[n] = f[keep[n]]"""
    f = np.asarray(f, dtype=float)
    return f[_check_indices(keep, f.shape[0])]


def vertex_upsample(f: np.ndarray, keep: Sequence[int], n: int) -> np.ndarray:
    """Zeros except f_u[keep[j]] = f[j]"""
    f = np.asarray(f, dtype=float)
    idx = _check_indices(keep, n)
    if f.shape[0] != idx.size:
        raise LengthMismatchError(idx.size, f.shape[0])
    out = np.zeros((n,) + f.shape[1:])
    out[idx] = f
    return out


def spectral_sampling_matrix(m: int, ch: SamplingChannel) -> np.ndarray:
    """Explicit (M/2) x M downsampling matrix [I, +-J]"""
    return spectral_downsample(np.eye(m), ch)


def vertex_sampling_matrix(keep: Sequence[int], n: int) -> np.ndarray:
    """Explicit |keep| x N selection matrix"""
    return vertex_downsample(np.eye(n), keep)
