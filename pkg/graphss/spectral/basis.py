"""
Graph Fourier basis.

Dense symmetric eigendecomposition of a variation operator, with a
deterministic sign rule so that repeated runs give identical coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from core.exceptions import DimensionMismatchError, EigensolverFailureError
from core.monitoring import track_duration
from graphss.graph.graph import OperatorKind, OperatorMatrix


@dataclass(frozen=True, eq=False)
class SpectralBasis:
    """
    Orthonormal eigenvectors (columns of ``u``) and ascending eigenvalues.
    """
    u: np.ndarray
    lam: np.ndarray
    kind: OperatorKind

    def __post_init__(self) -> None:
        u = np.array(self.u, dtype=float)
        lam = np.array(self.lam, dtype=float)
        if u.ndim != 2 or u.shape[0] != u.shape[1] or lam.shape != (u.shape[0],):
            raise DimensionMismatchError(u.shape[0], lam.shape[0], what="eigenvalue vector")
        u.setflags(write=False)
        lam.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        return self.lam.shape[0]

    @property
    def flipped_lam(self) -> np.ndarray:
        """diag of the flipped eigenvalue matrix (lambda_{N-1}, ..., lambda_0)"""
        return self.lam[::-1]

    @property
    def lam_max(self) -> float:
        return float(self.lam[-1])

    def gft(self, f: np.ndarray) -> np.ndarray:
        return gft(self, f)

    def igft(self, ftilde: np.ndarray) -> np.ndarray:
        return igft(self, ftilde)


def normalize_signs(u: np.ndarray) -> np.ndarray:
    """
    Flip each column so that its largest-magnitude entry is positive.

    Ties go to the lowest row index (``argmax`` returns the first maximum).
    """
    u = np.array(u, dtype=float)
    if u.size == 0:
        return u
    pivots = np.argmax(np.abs(u), axis=0)
    signs = np.sign(u[pivots, np.arange(u.shape[1])])
    signs[signs == 0] = 1.0
    return u * signs


@track_duration("eigendecompose")
def eigendecompose(op: OperatorMatrix) -> SpectralBasis:
    """
    Eigendecomposition with ascending eigenvalues and sign-normalized vectors.

    Raises:
        EigensolverFailureError: LAPACK did not converge
    """
    try:
        lam, u = scipy.linalg.eigh(op.values)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigensolverFailureError(f"eigendecomposition failed: {exc}") from exc
    return SpectralBasis(u=normalize_signs(u), lam=lam, kind=op.kind)


def _check_length(basis: SpectralBasis, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[0] != basis.n:
        raise DimensionMismatchError(basis.n, x.shape[0])
    return x


def gft(basis: SpectralBasis, f: np.ndarray) -> np.ndarray:
    """Forward GFT, U^T f (columns of a 2-D ``f`` are separate signals)"""
    return basis.u.T @ _check_length(basis, f)


def igft(basis: SpectralBasis, ftilde: np.ndarray) -> np.ndarray:
    """Inverse GFT, U f~"""
    return basis.u @ _check_length(basis, ftilde)
