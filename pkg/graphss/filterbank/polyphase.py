"""
Spectral-domain polyphase representation.

With the GFT coefficients split into an upper half x_u and a flipped lower
half J x_l, analysis becomes a 2x2 block matrix of diagonal blocks applied
after the split, and synthesis its c^2-scaled inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.exceptions import OddLengthError
from graphss.filters.designs import FilterBankSpec
from graphss.spectral.basis import SpectralBasis, gft


@dataclass(frozen=True, eq=False)
class PolyphasePair:
    hpoly: np.ndarray
    gpoly: np.ndarray
    c: float

    @property
    def n(self) -> int:
        return self.hpoly.shape[0]

    def product(self) -> np.ndarray:
        return self.gpoly @ self.hpoly


def _blocks(top_left, top_right, bottom_left, bottom_right) -> np.ndarray:
    return np.block([[np.diag(top_left), np.diag(top_right)], [np.diag(bottom_left), np.diag(bottom_right)]])


def polyphase_matrices(spec: FilterBankSpec) -> PolyphasePair:
    """
    hpoly = [[H0(u), H0(l')], [H1(u), -H1(l')]], gpoly = [[G0(u), G1(u)], [G0(l'), -G1(l')]]

    ``u`` is the first half of a gain vector and ``l'`` the reversed second half.

    Raises:
        OddLengthError: spec length is odd
    """
    n = spec.n
    if n % 2:
        raise OddLengthError(n)
    half = n // 2

    def upper(v: np.ndarray) -> np.ndarray:
        return v[:half]

    def lower_flipped(v: np.ndarray) -> np.ndarray:
        return v[::-1][:half]

    hpoly = _blocks(upper(spec.h0), lower_flipped(spec.h0), upper(spec.h1), -lower_flipped(spec.h1))
    gpoly = _blocks(upper(spec.g0), upper(spec.g1), lower_flipped(spec.g0), -lower_flipped(spec.g1))
    return PolyphasePair(hpoly=hpoly, gpoly=gpoly, c=spec.c)


def polyphase_input(xtilde: np.ndarray) -> np.ndarray:
    """diag(I, J) x: upper half as is, lower half reversed"""
    xtilde = np.asarray(xtilde, dtype=float)
    half = xtilde.shape[0] // 2
    return np.concatenate([xtilde[:half], xtilde[half:][::-1]])


def polyphase_analyze(pair: PolyphasePair, basis: SpectralBasis, f: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    stacked = pair.hpoly @ polyphase_input(gft(basis, f))
    half = pair.n // 2
    return stacked[:half], stacked[half:]
