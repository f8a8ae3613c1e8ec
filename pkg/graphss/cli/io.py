"""
Signal and pyramid files.

Signals are CSV with one value per line and an optional ``# n=<N>`` header.
Pyramids are JSON as produced by ``SubbandPyramid.to_json`` with a ``meta``
block describing the run that produced them.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from core.exceptions import ConfigurationError, DimensionMismatchError
from graphss.filterbank.octave import SubbandPyramid

PathLike = Union[str, Path]


def _header_count(path: Path) -> Optional[int]:
    with open(path, "r", encoding="utf-8") as handle:
        first = handle.readline().strip()
    if first.startswith("#"):
        key, _, value = first.lstrip("#").strip().partition("=")
        if key.strip() == "n" and value.strip():
            return int(value)
    return None


def read_signal(path: PathLike) -> np.ndarray:
    """
    Raises:
        ConfigurationError: unreadable file
        DimensionMismatchError: value count differs from the header
    """
    path = Path(path)
    try:
        values = np.loadtxt(path, comments="#", delimiter=",", ndmin=1, dtype=float)
        expected = _header_count(path)
    except (OSError, ValueError) as exc:
        raise ConfigurationError(f"cannot read signal {path}: {exc}", path=str(path)) from exc
    if expected is not None and values.shape[0] != expected:
        raise DimensionMismatchError(expected, values.shape[0], what="signal file")
    return values


def write_signal(f: np.ndarray, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    f = np.asarray(f, dtype=float).reshape(-1)
    # %.17g is enough digits for an exact float64 round trip
    np.savetxt(path, f, fmt="%.17g", header=f"n={f.size}", comments="# ", encoding="utf-8")
    return path


def write_pyramid(pyramid: SubbandPyramid, path: PathLike, meta: Optional[Dict[str, Any]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(pyramid.to_json(meta), encoding="utf-8")
    return path


def read_pyramid(path: PathLike) -> Tuple[SubbandPyramid, Dict[str, Any]]:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ConfigurationError(f"cannot read pyramid {path}: {exc}", path=str(path)) from exc
    return SubbandPyramid.from_dict(payload), dict(payload.get("meta") or {})
