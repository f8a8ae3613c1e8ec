"""
Spectral filter bank designs and perfect-reconstruction checks.

Gains are indexed by spectral position only: filter i acts on the i-th
eigenvalue in ascending order, and the designs pair index i with n-1-i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np
from pydantic import BaseModel, Field

from core.exceptions import DepthTooLargeError, FilterDesignError, OddLengthError
from core.logging import get_logger
from graphss.filters.prototypes import (
    cdf97_responses,
    check_half_band,
    meyer_prototype,
    spectral_frequencies,
)

logger = get_logger(__name__)


class FilterDesign(str, Enum):
    IDEAL = "ideal"
    MEYER = "meyer"
    CDF97 = "cdf97"


# Documented PR tolerance per design
PR_TOLERANCE = {
    FilterDesign.IDEAL: 0.0,
    FilterDesign.MEYER: 1e-12,
    FilterDesign.CDF97: 1e-9,
}


@dataclass(frozen=True, eq=False)
class FilterBankSpec:
    """
    Analysis gains h0/h1, synthesis gains g0/g1 and the PR constant c.

    Odd lengths are allowed here (vertex-domain experiments use them);
    only the design functions insist on even n.
    """
    h0: np.ndarray
    h1: np.ndarray
    g0: np.ndarray
    g1: np.ndarray
    c: float
    design: FilterDesign

    def __post_init__(self) -> None:
        gains = []
        for name in ("h0", "h1", "g0", "g1"):
            vec = np.array(getattr(self, name), dtype=float).reshape(-1)
            if not np.all(np.isfinite(vec)):
                raise FilterDesignError(f"{name} has non-finite entries")
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)
            gains.append(vec)
        if len({g.size for g in gains}) != 1:
            raise FilterDesignError("gain vectors differ in length")
        if not (np.isfinite(self.c) and self.c > 0):
            raise FilterDesignError(f"gain constant must be positive, got {self.c}")
        object.__setattr__(self, "design", FilterDesign(self.design))

    @property
    def n(self) -> int:
        return self.h0.size

    @property
    def c2(self) -> float:
        return float(self.c) ** 2

    def replace(self, **changes) -> "FilterBankSpec":
        fields = {k: getattr(self, k) for k in ("h0", "h1", "g0", "g1", "c", "design")}
        fields.update(changes)
        return FilterBankSpec(**fields)


class PrReport(BaseModel):
    """Residuals of the two perfect-reconstruction equations"""
    max_residual_identity: float = Field(ge=0)
    max_residual_alias: float = Field(ge=0)

    @property
    def worst(self) -> float:
        return max(self.max_residual_identity, self.max_residual_alias)

    def passes(self, tol: float) -> bool:
        return self.worst <= tol


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise OddLengthError(n)


def ideal_design(n: int) -> FilterBankSpec:
    """Brick-wall split at n/2, c = 1"""
    _require_even(n)
    h0 = (np.arange(n) < n // 2).astype(float)
    h1 = 1.0 - h0
    return FilterBankSpec(h0=h0, h1=h1, g0=h0, g1=h1, c=1.0, design=FilterDesign.IDEAL)


def meyer_orthogonal_design(n: int) -> FilterBankSpec:
    """Orthogonal bank from the Meyer kernel: h1 = flip(h0), g = h, c = 1"""
    _require_even(n)
    h0 = meyer_prototype(spectral_frequencies(n))
    h1 = h0[::-1].copy()
    return FilterBankSpec(h0=h0, h1=h1, g0=h0, g1=h1, c=1.0, design=FilterDesign.MEYER)


def cdf97_biorthogonal_design(n: int) -> FilterBankSpec:
    """
    Biorthogonal bank from the CDF 9/7 low-pass pair.

    h1[i] = g0[n-1-i], g1[i] = h0[n-1-i]; c^2 = h0[0] g0[0].
    """
    _require_even(n)
    check_half_band()
    h0, g0 = cdf97_responses(spectral_frequencies(n))
    c2 = float(h0[0] * g0[0])
    return FilterBankSpec(
        h0=h0, h1=g0[::-1].copy(), g0=g0, g1=h0[::-1].copy(), c=float(np.sqrt(c2)), design=FilterDesign.CDF97
    )


_DESIGNS = {
    FilterDesign.IDEAL: ideal_design,
    FilterDesign.MEYER: meyer_orthogonal_design,
    FilterDesign.CDF97: cdf97_biorthogonal_design,
}


def design_filter_bank(design: FilterDesign, n: int) -> FilterBankSpec:
    return _DESIGNS[FilterDesign(design)](n)


def design_octave(design: FilterDesign, n: int, levels: int) -> List[FilterBankSpec]:
    """
    Per-level specs of lengths n, n/2, ..., n/2^(levels-1).

    Raises:
        DepthTooLargeError: some level length is odd
    """
    if levels < 1:
        raise DepthTooLargeError(n, levels)
    specs = []
    length = n
    for _ in range(levels):
        if length < 2 or length % 2:
            raise DepthTooLargeError(n, levels)
        specs.append(design_filter_bank(design, length))
        length //= 2
    return specs


def verify_pr(spec: FilterBankSpec) -> PrReport:
    """
    max_i |g0 h0 + g1 h1 - c^2| and max_i |g0[i] h0[n-1-i] - g1[i] h1[n-1-i]|
    """
    identity = spec.g0 * spec.h0 + spec.g1 * spec.h1 - spec.c2
    alias = spec.g0 * spec.h0[::-1] - spec.g1 * spec.h1[::-1]
    report = PrReport(
        max_residual_identity=float(np.max(np.abs(identity))) if identity.size else 0.0,
        max_residual_alias=float(np.max(np.abs(alias))) if alias.size else 0.0,
    )
    logger.debug("PR residuals", design=spec.design.value, n=spec.n, **report.model_dump())
    return report


def value_ideal_gains(lambdas: np.ndarray) -> np.ndarray:
    """1 where lambda_i < lambda_max/2, else 0"""
    lambdas = np.asarray(lambdas, dtype=float)
    if lambdas.size == 0:
        return lambdas.copy()
    return (lambdas < lambdas[-1] / 2.0).astype(float)
