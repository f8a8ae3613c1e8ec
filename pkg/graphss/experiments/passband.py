"""
Passband comparison against the value-ideal low-pass filter.

The index-ideal design always passes the lower half of the spectral indices;
the value-ideal filter passes eigenvalues below lambda_max/2. On graphs with
an uneven spectrum the two disagree, and smooth designs sit closer to the
value-ideal output.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from core.logging import get_logger
from graphss.experiments.signals import noisy_exponential_spectrum
from graphss.filters.designs import FilterDesign, design_filter_bank, value_ideal_gains
from graphss.graph.generators import GeneratorParams, GraphModel, SensorWeighting, generate
from graphss.graph.graph import OperatorKind
from graphss.spectral.basis import SpectralBasis, gft
from graphss.spectral.cache import BasisCache, basis_for

logger = get_logger(__name__)

ALL_DESIGNS = (FilterDesign.IDEAL, FilterDesign.MEYER, FilterDesign.CDF97)


class PassbandResult(BaseModel):
    design: FilterDesign
    errors: List[float]  # (value-ideal output - design output)^2 per spectral index
    distance: float


def passband_compare(
    basis: SpectralBasis, f: np.ndarray, designs: Sequence[FilterDesign] = ALL_DESIGNS
) -> Dict[FilterDesign, PassbandResult]:
    """Low-pass output of each design against the value-ideal output, in the spectral domain"""
    ftilde = gft(basis, f)
    reference = value_ideal_gains(basis.lam) * ftilde
    results = {}
    for design in designs:
        design = FilterDesign(design)
        output = design_filter_bank(design, basis.n).h0 * ftilde
        diff = reference - output
        results[design] = PassbandResult(
            design=design,
            errors=[float(e) for e in diff ** 2],
            distance=float(np.linalg.norm(diff)),
        )
    return results


class PassbandStudy(BaseModel):
    """Seeded repetition of ``passband_compare`` over fresh graph realizations"""

    n: int
    concentrated: bool
    kind: OperatorKind
    sigma: float
    seeds: List[int]
    distances: Dict[FilterDesign, List[float]]
    ideal_farther: Dict[FilterDesign, float] = Field(
        default_factory=dict, description="fraction of runs where Ideal is farther than the design"
    )

    def mean_distance(self, design: FilterDesign) -> float:
        return float(np.mean(self.distances[FilterDesign(design)]))


def study_generator_params(params: Optional[GeneratorParams] = None, concentrated: bool = False) -> GeneratorParams:
    """
    Sensor parameters for the passband study.

    Uses k-NN weighting unless ``params`` sets a weighting explicitly.
    """
    params = params or GeneratorParams()
    update: Dict[str, object] = {"concentrated": concentrated}
    if "weighting" not in params.model_fields_set:
        update["weighting"] = SensorWeighting.KNN
    return params.model_copy(update=update)


def passband_study(
    n: int = 100,
    runs: int = 100,
    base_seed: int = 1,
    concentrated: bool = False,
    sigma: float = 0.05,
    kind: OperatorKind = OperatorKind.COMBINATORIAL,
    designs: Sequence[FilterDesign] = ALL_DESIGNS,
    params: Optional[GeneratorParams] = None,
    cache: Optional[BasisCache] = None,
) -> PassbandStudy:
    """Regenerate the sensor graph and the noisy spectrum for each seed ``base_seed + run``"""
    params = study_generator_params(params, concentrated)
    designs = [FilterDesign(d) for d in designs]
    seeds = [base_seed + run for run in range(runs)]
    distances: Dict[FilterDesign, List[float]] = {d: [] for d in designs}

    for seed in seeds:
        graph = generate(GraphModel.RANDOM_SENSOR, n, params, seed=seed)
        basis = basis_for(graph, kind, cache)
        f = noisy_exponential_spectrum(basis, sigma, seed)
        for design, result in passband_compare(basis, f, designs).items():
            distances[design].append(result.distance)

    ideal_farther = {}
    if FilterDesign.IDEAL in distances:
        ideal = np.asarray(distances[FilterDesign.IDEAL])
        for design in designs:
            if design is not FilterDesign.IDEAL:
                ideal_farther[design] = float(np.mean(ideal > np.asarray(distances[design])))

    study = PassbandStudy(
        n=n,
        concentrated=concentrated,
        kind=kind,
        sigma=sigma,
        seeds=seeds,
        distances=distances,
        ideal_farther=ideal_farther,
    )
    logger.info(
        "passband study finished",
        n=n,
        concentrated=concentrated,
        runs=runs,
        **{f"mean_{d.value}": round(study.mean_distance(d), 4) for d in designs},
    )
    return study
