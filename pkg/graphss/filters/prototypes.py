"""
Frequency-domain prototype filters.

Both prototypes are zero-phase low-pass responses on [0, pi]; the filter
bank designs sample them at omega_i = pi*i/(n-1) so that index i and n-1-i
land on frequencies summing to pi.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial

from core.exceptions import FilterDesignError

# Daubechies half-band remainder for four vanishing moments: Q(y) = sum_k C(3+k, k) y^k
_CDF97_REMAINDER = Polynomial([1.0, 4.0, 10.0, 20.0])


def spectral_frequencies(n: int) -> np.ndarray:
    """omega_i = pi*i/(n-1), endpoints included"""
    if n < 2:
        return np.zeros(n)
    return np.pi * np.arange(n) / (n - 1)


def meyer_auxiliary(x: np.ndarray) -> np.ndarray:
    """nu(x) = x^4 (35 - 84x + 70x^2 - 20x^3), clipped to [0, 1] outside the unit interval"""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    return x ** 4 * (35.0 - 84.0 * x + 70.0 * x ** 2 - 20.0 * x ** 3)


def meyer_prototype(omega: np.ndarray) -> np.ndarray:
    """
    Meyer low-pass kernel.

    1 on [0, pi/3], cos(pi/2 * nu(3w/pi - 1)) on the transition band, 0 from 2pi/3.
    """
    omega = np.asarray(omega, dtype=float)
    response = np.cos(0.5 * np.pi * meyer_auxiliary(3.0 * omega / np.pi - 1.0))
    response = np.where(omega <= np.pi / 3.0, 1.0, response)
    return np.where(omega >= 2.0 * np.pi / 3.0, 0.0, response)


def zero_phase_response(taps: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """h[0] + 2 sum_k h[k] cos(k w) for a symmetric filter given by its half taps"""
    taps = np.asarray(taps, dtype=float)
    omega = np.asarray(omega, dtype=float)
    k = np.arange(1, taps.size)
    return taps[0] + 2.0 * np.cos(np.outer(omega, k)) @ taps[1:]


def _half_taps(amplitude: Polynomial) -> np.ndarray:
    # amplitude is a polynomial in x = cos(w); T_k(cos w) = cos(k w)
    coef = amplitude.convert(kind=Chebyshev).coef
    taps = coef / 2.0
    taps[0] = coef[0]
    return taps


@lru_cache(maxsize=1)
def cdf97_taps() -> Tuple[np.ndarray, np.ndarray]:
    """
    Half taps (center first) of the CDF 9/7 analysis and synthesis low-pass filters.

    Obtained by factoring Q into a real-root linear part (7-tap synthesis)
    and the remaining quadratic (9-tap analysis). Both filters are normalized to
    unit DC gain, so the bank constant is c = 1.

    Returns:
        (analysis 5 half taps, synthesis 4 half taps)
    """
    roots = _CDF97_REMAINDER.roots()
    real_root = float(roots[np.argmin(np.abs(roots.imag))].real)

    synthesis_factor = Polynomial([1.0, -1.0 / real_root])
    analysis_factor, remainder = divmod(_CDF97_REMAINDER, synthesis_factor)
    if np.max(np.abs(remainder.coef)) > 1e-10:
        raise FilterDesignError("CDF 9/7 factorization left a remainder")

    # cos^2(w/2) and sin^2(w/2) as polynomials in x = cos(w)
    cos_half_sq = Polynomial([0.5, 0.5])
    sin_half_sq = Polynomial([0.5, -0.5])

    analysis = cos_half_sq ** 2 * analysis_factor(sin_half_sq)
    synthesis = cos_half_sq ** 2 * synthesis_factor(sin_half_sq)
    return _half_taps(analysis), _half_taps(synthesis)


def cdf97_responses(omega: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Analysis and synthesis low-pass amplitudes at ``omega``"""
    analysis, synthesis = cdf97_taps()
    return zero_phase_response(analysis, omega), zero_phase_response(synthesis, omega)


def check_half_band(tol: float = 1e-12) -> float:
    """
    Max deviation of A(w)S(w) + A(pi-w)S(pi-w) from A(0)S(0) on a dense grid.

    Raises:
        FilterDesignError: deviation above ``tol``
    """
    omega = np.linspace(0.0, np.pi, 1025)
    a, s = cdf97_responses(omega)
    total = a * s + a[::-1] * s[::-1]
    deviation = float(np.max(np.abs(total - a[0] * s[0])))
    if deviation > tol:
        raise FilterDesignError(f"CDF 9/7 half-band identity violated by {deviation:.3e}")
    return deviation
