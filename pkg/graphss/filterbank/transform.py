"""
Two-channel critically sampled transform with spectral-domain sampling.

Analysis filters the GFT coefficients and folds each channel to half length;
synthesis unfolds, filters and divides by c^2. Coefficients stay in the
spectral domain between the two stages.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from core.exceptions import DimensionMismatchError, OddLengthError
from graphss.filters.designs import FilterBankSpec
from graphss.sampling import SamplingChannel, spectral_downsample, spectral_upsample
from graphss.spectral.basis import SpectralBasis, gft, igft


def apply_gains(gains: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Diagonal filter along axis 0"""
    x = np.asarray(x, dtype=float)
    return gains.reshape((-1,) + (1,) * (x.ndim - 1)) * x


def split_spectrum(spec: FilterBankSpec, xtilde: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(S_d0 H0 x, S_d1 H1 x) on spectral coefficients"""
    xtilde = np.asarray(xtilde, dtype=float)
    if xtilde.shape[0] != spec.n:
        raise DimensionMismatchError(spec.n, xtilde.shape[0], what="spectrum")
    if spec.n % 2:
        raise OddLengthError(spec.n)
    low = spectral_downsample(apply_gains(spec.h0, xtilde), SamplingChannel.LOW)
    high = spectral_downsample(apply_gains(spec.h1, xtilde), SamplingChannel.HIGH)
    return low, high


def merge_spectrum(spec: FilterBankSpec, low: np.ndarray, high: np.ndarray) -> np.ndarray:
    """(G0 S_u0 low + G1 S_u1 high) / c^2"""
    low = np.asarray(low, dtype=float)
    high = np.asarray(high, dtype=float)
    half = spec.n // 2
    for band in (low, high):
        if band.shape[0] != half:
            raise DimensionMismatchError(half, band.shape[0], what="subband")
    out = apply_gains(spec.g0, spectral_upsample(low, SamplingChannel.LOW))
    out = out + apply_gains(spec.g1, spectral_upsample(high, SamplingChannel.HIGH))
    return out / spec.c2


def _check_spec(basis: SpectralBasis, spec: FilterBankSpec) -> None:
    if spec.n != basis.n:
        raise DimensionMismatchError(basis.n, spec.n, what="filter bank")


def analyze_one_level(basis: SpectralBasis, spec: FilterBankSpec, f: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    One analysis stage.

    Returns:
        (low, high) spectral coefficients, each of length N/2
    """
    _check_spec(basis, spec)
    return split_spectrum(spec, gft(basis, f))


def synthesize_one_level(basis: SpectralBasis, spec: FilterBankSpec, low: np.ndarray, high: np.ndarray) -> np.ndarray:
    """Inverse of ``analyze_one_level`` for PR specs"""
    _check_spec(basis, spec)
    return igft(basis, merge_spectrum(spec, low, high))


def transfer_matrix(spec: FilterBankSpec) -> np.ndarray:
    """
    G0 S_u0 S_d0 H0 + G1 S_u1 S_d1 H1 as an explicit N x N matrix.

    Equals c^2 I exactly when the filter bank satisfies both PR equations.
    """
    n = spec.n
    if n % 2:
        raise OddLengthError(n)
    eye = np.eye(n)
    flip = eye[::-1]
    low = (spec.g0[:, None] * (eye + flip)) * spec.h0[None, :]
    high = (spec.g1[:, None] * (eye - flip)) * spec.h1[None, :]
    return low + high
