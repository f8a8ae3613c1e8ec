"""Spectral bases and graph Fourier transforms"""

from .basis import SpectralBasis, eigendecompose, gft, igft, normalize_signs
from .cache import BasisCache, basis_for, operator_digest

__all__ = [
    "SpectralBasis",
    "eigendecompose",
    "gft",
    "igft",
    "normalize_signs",
    "BasisCache",
    "basis_for",
    "operator_digest",
]
