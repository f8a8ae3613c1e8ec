"""
Test signal generators.

Spectral shapes are defined on a SpectralBasis; the localized model also needs
a vertex -> cluster map, usually from ``default_clusters``.
"""

from __future__ import annotations

from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from core.exceptions import (
    ConfigurationError,
    DimensionMismatchError,
    EmptyClusterError,
    RangeOutOfSpectrumError,
)
from graphss.graph.generators import default_clusters
from graphss.graph.graph import Graph
from graphss.spectral.basis import SpectralBasis, igft

# eigenvalue index ranges for a 400-vertex graph; other sizes are scaled
REFERENCE_SIZE = 400
REFERENCE_RANGES: Tuple[Tuple[int, int], ...] = ((9, 29), (59, 79), (149, 169), (299, 319))


class SignalModel(str, Enum):
    SMOOTH = "smooth"
    LOCALIZED = "localized"
    MIXED = "mixed"
    CUSTOM = "custom"


class SignalSpec(BaseModel):
    """Signal model and its parameters"""

    model: SignalModel = SignalModel.SMOOTH
    ranges: Optional[List[Tuple[int, int]]] = None
    localized_range: int = Field(default=1, ge=0, description="index into the ranges used by the mixed model")
    localized_weight: float = 1.0
    values: Optional[List[float]] = None

    @field_validator("ranges")
    @classmethod
    def check_ranges(cls, v: Optional[List[Tuple[int, int]]]) -> Optional[List[Tuple[int, int]]]:
        if v is None:
            return v
        for lo, hi in v:
            if lo < 0 or hi < lo:
                raise ValueError(f"invalid index range ({lo}, {hi})")
        return v


def default_ranges(n: int) -> List[Tuple[int, int]]:
    """Reference ranges scaled by n/400, rounded and clamped to [0, n)"""
    scale = n / REFERENCE_SIZE
    ranges = []
    for lo, hi in REFERENCE_RANGES:
        lo_n = min(max(int(round(lo * scale)), 0), n - 1)
        hi_n = min(max(int(round(hi * scale)), lo_n), n - 1)
        ranges.append((lo_n, hi_n))
    return ranges


def gen_smooth_signal(basis: SpectralBasis) -> np.ndarray:
    """f = U exp(-lambda/4)"""
    return igft(basis, np.exp(-basis.lam / 4.0))


def _band_sum(basis: SpectralBasis, lo: int, hi: int) -> np.ndarray:
    n = basis.n
    if not (0 <= lo <= hi < n):
        raise RangeOutOfSpectrumError(lo, hi, n)
    lam = basis.lam
    selected = (lam >= lam[lo]) & (lam <= lam[hi])
    return basis.u[:, selected].sum(axis=1)


def gen_localized_signal(
    basis: SpectralBasis, clusters: Sequence[int], ranges: Optional[Sequence[Tuple[int, int]]] = None
) -> np.ndarray:
    """
    Sum over clusters j of f_j / max|f_j| where f_j is the sum of the
    eigenvectors with lambda[lo_j] <= lambda <= lambda[hi_j], restricted to cluster j.

    Args:
        basis: Spectral basis
        clusters: Cluster id per vertex, ids 0..len(ranges)-1
        ranges: Eigenvalue index pair per cluster, ``default_ranges(N)`` by default

    Raises:
        RangeOutOfSpectrumError: an index pair outside [0, N)
        EmptyClusterError: some f_j vanishes
    """
    clusters = np.asarray(clusters, dtype=int)
    if clusters.shape != (basis.n,):
        raise DimensionMismatchError(basis.n, clusters.shape[0], what="cluster map")
    ranges = list(ranges) if ranges is not None else default_ranges(basis.n)

    f = np.zeros(basis.n)
    for j, (lo, hi) in enumerate(ranges):
        part = (clusters == j) * _band_sum(basis, lo, hi)
        peak = np.max(np.abs(part))
        if peak == 0.0:
            raise EmptyClusterError(j)
        f += part / peak
    return f


def gen_mixed_signal(
    basis: SpectralBasis,
    localized_range: Optional[Tuple[int, int]] = None,
    localized_weight: float = 1.0,
) -> np.ndarray:
    """Smooth signal plus one spectrally localized component spread over all vertices"""
    smooth = gen_smooth_signal(basis)
    if localized_weight == 0.0:
        return smooth
    band = localized_range if localized_range is not None else default_ranges(basis.n)[1]
    localized = gen_localized_signal(basis, np.zeros(basis.n, dtype=int), [band])
    return smooth + localized_weight * localized


def noisy_exponential_spectrum(basis: SpectralBasis, sigma: float = 0.05, seed: int = 0) -> np.ndarray:
    """f = U (exp(-lambda/4) + e), e ~ N(0, sigma^2) drawn in the spectral domain"""
    if sigma < 0:
        raise ConfigurationError(f"sigma must be non-negative, got {sigma}")
    rng = np.random.default_rng(seed)
    return igft(basis, np.exp(-basis.lam / 4.0) + rng.normal(0.0, sigma, basis.n))


def generate_signal(spec: SignalSpec, basis: SpectralBasis, graph: Optional[Graph] = None, seed: int = 0) -> np.ndarray:
    """Dispatch on ``spec.model``"""
    if spec.model is SignalModel.SMOOTH:
        return gen_smooth_signal(basis)

    ranges = spec.ranges or default_ranges(basis.n)
    if spec.model is SignalModel.LOCALIZED:
        if graph is None:
            raise ConfigurationError("the localized model needs the graph for its cluster map")
        clusters = default_clusters(graph, len(ranges), seed=seed)
        return gen_localized_signal(basis, clusters, ranges)

    if spec.model is SignalModel.MIXED:
        if spec.localized_range >= len(ranges):
            raise ConfigurationError(f"localized_range {spec.localized_range} not among {len(ranges)} ranges")
        return gen_mixed_signal(basis, ranges[spec.localized_range], spec.localized_weight)

    if spec.values is None:
        raise ConfigurationError("custom signals need explicit values")
    values = np.asarray(spec.values, dtype=float)
    if values.shape != (basis.n,):
        raise DimensionMismatchError(basis.n, values.shape[0], what="custom signal")
    return values
