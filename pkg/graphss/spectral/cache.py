"""
On-disk cache of spectral bases.

The GFT basis only needs computing once per graph; entries are ``.npz`` files
named by a SHA-256 digest of the operator kind and matrix bytes.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Optional, Union

import numpy as np

from core.config import settings
from core.logging import get_logger
from graphss.graph.graph import Graph, OperatorKind, OperatorMatrix, laplacian
from graphss.spectral.basis import SpectralBasis, eigendecompose

logger = get_logger(__name__)


def operator_digest(op: OperatorMatrix) -> str:
    values = np.ascontiguousarray(op.values, dtype=np.float64)
    digest = hashlib.sha256()
    digest.update(op.kind.value.encode("utf-8"))
    digest.update(np.asarray(values.shape, dtype=np.int64).tobytes())
    digest.update(values.tobytes())
    return digest.hexdigest()


class BasisCache:
    """
    Directory-backed basis cache.

    Corrupt or unreadable entries are recomputed and overwritten.
    """

    def __init__(self, directory: Optional[Union[str, Path]] = None, enabled: Optional[bool] = None):
        self.directory = Path(directory) if directory is not None else Path(settings.cache_dir)
        self.enabled = settings.cache_enabled if enabled is None else enabled
        self.hits = 0
        self.misses = 0

    def path_for(self, op: OperatorMatrix) -> Path:
        return self.directory / f"{operator_digest(op)}.npz"

    def get_or_compute(self, op: OperatorMatrix) -> SpectralBasis:
        if not self.enabled:
            return eigendecompose(op)

        path = self.path_for(op)
        if path.exists():
            try:
                with np.load(path) as data:
                    basis = SpectralBasis(u=data["u"], lam=data["lam"], kind=OperatorKind(str(data["kind"])))
                self.hits += 1
                logger.debug("basis cache hit", path=str(path))
                return basis
            except (OSError, KeyError, ValueError) as exc:
                logger.warning("unreadable basis cache entry, recomputing", path=str(path), error=str(exc))

        self.misses += 1
        basis = eigendecompose(op)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            with open(path, "wb") as handle:
                np.savez(handle, u=basis.u, lam=basis.lam, kind=np.array(basis.kind.value))
            logger.debug("basis cached", path=str(path), n=basis.n)
        except OSError as exc:
            logger.warning("could not write basis cache", path=str(path), error=str(exc))
        return basis


def basis_for(graph: Graph, kind: OperatorKind, cache: Optional[BasisCache] = None) -> SpectralBasis:
    """Eigenbasis of the chosen Laplacian, through ``cache`` when one is given"""
    op = laplacian(graph, OperatorKind(kind))
    return cache.get_or_compute(op) if cache is not None else eigendecompose(op)
