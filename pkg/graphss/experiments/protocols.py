"""
Evaluation protocols: nonlinear approximation, hard-threshold denoising and
seeded Monte Carlo repetition.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, computed_field, model_validator

from core.config import settings
from core.exceptions import ConfigurationError
from core.logging import get_logger
from core.monitoring import track_duration
from graphss.experiments.metrics import add_noise, snr_db
from graphss.experiments.signals import gen_smooth_signal
from graphss.filterbank.octave import analyze_octave, synthesize_octave
from graphss.filters.designs import FilterBankSpec, FilterDesign, design_octave
from graphss.graph.graph import Graph, OperatorKind
from graphss.spectral.basis import SpectralBasis
from graphss.spectral.cache import BasisCache, basis_for

logger = get_logger(__name__)

DEFAULT_THRESHOLD_FACTOR = 3.0


class Protocol(str, Enum):
    DENOISE = "denoise"
    NLA = "nla"
    NOISY = "noisy"  # baseline: SNR of the noisy input itself


def method_tag(design: FilterDesign, kind: OperatorKind) -> str:
    return f"{FilterDesign(design).value}({OperatorKind(kind).value})"


class ExperimentReport(BaseModel):
    """Per-run and mean SNR of one protocol/method cell"""

    protocol: Protocol
    method: str
    levels: Optional[int] = None
    sigma: Optional[float] = None
    fraction: Optional[float] = None
    seeds: List[int] = Field(default_factory=list)
    snr_db: List[float] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_runs(self) -> "ExperimentReport":
        if len(self.seeds) != len(self.snr_db):
            raise ValueError(f"{len(self.seeds)} seeds but {len(self.snr_db)} results")
        return self

    @computed_field
    @property
    def runs(self) -> int:
        return len(self.seeds)

    @computed_field
    @property
    def mean_snr_db(self) -> float:
        return float(np.mean(self.snr_db)) if self.snr_db else float("nan")


# ============================================================================
# SINGLE-SIGNAL PROTOCOLS
# ============================================================================


def keep_count(n: int, fraction: float) -> int:
    """ceil(fraction * n), robust to fractions like 1/n"""
    if not 0.0 < fraction <= 1.0:
        raise ConfigurationError(f"fraction must be in (0, 1], got {fraction}")
    return min(n, max(1, math.ceil(round(fraction * n, 9))))


def keep_largest(values: np.ndarray, count: int) -> np.ndarray:
    """Zero all but the ``count`` largest magnitudes; ties resolve to lower indices"""
    values = np.asarray(values, dtype=float)
    order = np.argsort(-np.abs(values), kind="stable")
    out = np.zeros_like(values)
    kept = order[:count]
    out[kept] = values[kept]
    return out


def hard_threshold(values: np.ndarray, threshold: float) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    return np.where(np.abs(values) > threshold, values, 0.0)


def nla(
    f: np.ndarray, basis: SpectralBasis, specs: Sequence[FilterBankSpec], levels: int, fraction: float
) -> Tuple[np.ndarray, float]:
    """
    Nonlinear approximation keeping the largest coefficients across all bands.

    Returns:
        (reconstruction, SNR in dB against ``f``)
    """
    pyramid = analyze_octave(basis, specs, f, levels)
    count = keep_count(pyramid.n, fraction)
    approx = pyramid.with_vector(keep_largest(pyramid.to_vector(), count))
    reconstruction = synthesize_octave(basis, specs, approx)
    return reconstruction, snr_db(f, reconstruction)


def denoise(
    fnoisy: np.ndarray,
    basis: SpectralBasis,
    specs: Sequence[FilterBankSpec],
    levels: int,
    sigma: float,
    clean: Optional[np.ndarray] = None,
    factor: float = DEFAULT_THRESHOLD_FACTOR,
) -> Tuple[np.ndarray, Optional[float]]:
    """
    Hard-threshold every band except the deepest low band at ``factor * sigma``.

    Returns:
        (estimate, SNR in dB against ``clean``, None without a clean reference)
    """
    if sigma < 0:
        raise ConfigurationError(f"sigma must be non-negative, got {sigma}")
    pyramid = analyze_octave(basis, specs, fnoisy, levels)
    threshold = factor * sigma

    low_count = pyramid.lowpass.values.shape[0]
    coefficients = pyramid.to_vector()
    cut = coefficients.shape[0] - low_count
    coefficients[:cut] = hard_threshold(coefficients[:cut], threshold)

    estimate = synthesize_octave(basis, specs, pyramid.with_vector(coefficients))
    return estimate, (snr_db(clean, estimate) if clean is not None else None)


# ============================================================================
# MONTE CARLO
# ============================================================================


@track_duration("monte_carlo")
def monte_carlo(
    protocol: Protocol,
    runs: int,
    base_seed: int,
    *,
    signal: np.ndarray,
    basis: Optional[SpectralBasis] = None,
    specs: Optional[Sequence[FilterBankSpec]] = None,
    levels: Optional[int] = None,
    sigma: float = 0.0,
    fraction: Optional[float] = None,
    factor: float = DEFAULT_THRESHOLD_FACTOR,
    method: str = "",
    workers: Optional[int] = None,
) -> ExperimentReport:
    """
    Repeat a protocol with seeds ``base_seed + run``.

    Each run adds vertex-domain noise of level ``sigma`` to ``signal`` with its
    own seed. Results are stored by run index, so the report does not depend
    on the order in which runs finish.
    """
    protocol = Protocol(protocol)
    if runs < 1:
        raise ConfigurationError(f"runs must be at least 1, got {runs}")
    if protocol is not Protocol.NOISY and (basis is None or specs is None or levels is None):
        raise ConfigurationError(f"protocol {protocol.value} needs basis, specs and levels")
    if protocol is Protocol.NLA and fraction is None:
        raise ConfigurationError("the nla protocol needs a fraction")

    seeds = [base_seed + run for run in range(runs)]

    def one_run(seed: int) -> float:
        noisy = add_noise(signal, sigma, seed)
        if protocol is Protocol.NOISY:
            return snr_db(signal, noisy)
        if protocol is Protocol.DENOISE:
            return denoise(noisy, basis, specs, levels, sigma, clean=signal, factor=factor)[1]
        reconstruction, _ = nla(noisy, basis, specs, levels, fraction)
        return snr_db(signal, reconstruction)

    pool_size = workers or settings.monte_carlo_workers
    if pool_size > 1:
        with ThreadPoolExecutor(max_workers=pool_size) as pool:
            results = list(pool.map(one_run, seeds))
    else:
        results = [one_run(seed) for seed in seeds]

    report = ExperimentReport(
        protocol=protocol,
        method=method or protocol.value,
        levels=levels if protocol is not Protocol.NOISY else None,
        sigma=sigma,
        fraction=fraction,
        seeds=seeds,
        snr_db=results,
    )
    logger.info(
        "monte carlo finished",
        protocol=protocol.value,
        method=report.method,
        runs=runs,
        mean_snr_db=round(report.mean_snr_db, 4),
    )
    return report


# ============================================================================
# TABLES AND CURVES
# ============================================================================


def denoising_table(
    graph: Graph,
    methods: Sequence[Tuple[FilterDesign, OperatorKind]],
    sigmas: Sequence[float],
    runs: int,
    base_seed: int,
    levels: int = 2,
    signal: Optional[np.ndarray] = None,
    cache: Optional[BasisCache] = None,
) -> List[ExperimentReport]:
    """
    One report per (sigma, method) cell plus a noisy baseline per sigma.

    Methods decompose into two-level octave bands unless ``levels`` says otherwise.
    The clean signal defaults to the smooth signal of the combinatorial basis;
    each method transforms in the basis of its own Laplacian kind.
    """
    if signal is None:
        signal = gen_smooth_signal(basis_for(graph, OperatorKind.COMBINATORIAL, cache))

    bases = {kind: basis_for(graph, kind, cache) for kind in {OperatorKind(k) for _, k in methods}}
    reports = []
    for sigma in sigmas:
        reports.append(monte_carlo(Protocol.NOISY, runs, base_seed, signal=signal, sigma=sigma, method="noisy"))
        for design, kind in methods:
            kind = OperatorKind(kind)
            reports.append(
                monte_carlo(
                    Protocol.DENOISE,
                    runs,
                    base_seed,
                    signal=signal,
                    basis=bases[kind],
                    specs=design_octave(design, graph.n, levels),
                    levels=levels,
                    sigma=sigma,
                    method=method_tag(design, kind),
                )
            )
    return reports


class NlaCurve(BaseModel):
    method: str
    levels: int
    fractions: List[float]
    snr_db: List[float]


def nla_curve(
    graph: Graph,
    design: FilterDesign,
    kind: OperatorKind,
    fractions: Sequence[float],
    levels: int = 1,
    signal: Optional[np.ndarray] = None,
    cache: Optional[BasisCache] = None,
) -> NlaCurve:
    """SNR of ``nla`` at each fraction; signal defaults to the combinatorial smooth signal"""
    if signal is None:
        signal = gen_smooth_signal(basis_for(graph, OperatorKind.COMBINATORIAL, cache))
    basis = basis_for(graph, kind, cache)
    specs = design_octave(design, graph.n, levels)
    snrs = [nla(signal, basis, specs, levels, fraction)[1] for fraction in fractions]
    return NlaCurve(method=method_tag(design, kind), levels=levels, fractions=list(fractions), snr_db=snrs)
