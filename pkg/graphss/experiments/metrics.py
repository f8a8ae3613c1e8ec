"""Noise and error measures"""

from __future__ import annotations

import numpy as np

from core.exceptions import ConfigurationError, DimensionMismatchError, ZeroReferenceError


def add_noise(f: np.ndarray, sigma: float, seed: int) -> np.ndarray:
    """f + e with e i.i.d. N(0, sigma^2) in the vertex domain, deterministic per seed"""
    if sigma < 0:
        raise ConfigurationError(f"sigma must be non-negative, got {sigma}")
    f = np.asarray(f, dtype=float)
    if sigma == 0:
        return f.copy()
    rng = np.random.default_rng(seed)
    return f + rng.normal(0.0, sigma, f.shape)


def snr_db(reference: np.ndarray, estimate: np.ndarray) -> float:
    """
    20 log10(||reference|| / ||reference - estimate||).

    Returns +inf when the estimate equals the reference exactly.

    Raises:
        ZeroReferenceError: ||reference|| == 0
    """
    reference = np.asarray(reference, dtype=float)
    estimate = np.asarray(estimate, dtype=float)
    if reference.shape != estimate.shape:
        raise DimensionMismatchError(reference.shape[0], estimate.shape[0], what="estimate")

    signal = np.linalg.norm(reference)
    if signal == 0.0:
        raise ZeroReferenceError()
    error = np.linalg.norm(reference - estimate)
    if error == 0.0:
        return float("inf")
    return float(20.0 * np.log10(signal / error))
