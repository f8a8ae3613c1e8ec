"""
Report and dump writers.

JSON carries the full pydantic models; CSV files are flat tables meant for
external plotting tools.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Sequence, Union

import numpy as np
import pandas as pd

from graphss.experiments.passband import PassbandResult, PassbandStudy
from graphss.experiments.protocols import ExperimentReport, NlaCurve
from graphss.filters.designs import FilterBankSpec, FilterDesign

PathLike = Union[str, Path]


def _ensure_parent(path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def report_frame(reports: Sequence[ExperimentReport], include_mean: bool = True) -> pd.DataFrame:
    """Columns method, protocol, sigma, fraction, run, seed, snr_db; one mean row per report"""
    rows = []
    for report in reports:
        common = {
            "method": report.method,
            "protocol": report.protocol.value,
            "sigma": report.sigma,
            "fraction": report.fraction,
        }
        for run, (seed, snr) in enumerate(zip(report.seeds, report.snr_db)):
            rows.append({**common, "run": str(run), "seed": seed, "snr_db": snr})
        if include_mean:
            rows.append({**common, "run": "mean", "seed": None, "snr_db": report.mean_snr_db})
    return pd.DataFrame(rows, columns=["method", "protocol", "sigma", "fraction", "run", "seed", "snr_db"])


def write_reports_csv(reports: Sequence[ExperimentReport], path: PathLike) -> Path:
    path = _ensure_parent(path)
    report_frame(reports).to_csv(path, index=False, encoding="utf-8")
    return path


def write_reports_json(reports: Sequence[ExperimentReport], path: PathLike) -> Path:
    # python mode keeps inf as inf; json writes it as Infinity, which json.loads reads back
    path = _ensure_parent(path)
    payload = [report.model_dump(mode="python") for report in reports]
    for item in payload:
        item["protocol"] = item["protocol"].value
    path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return path


def nla_curve_frame(curves: Sequence[NlaCurve]) -> pd.DataFrame:
    rows = [
        {"method": curve.method, "levels": curve.levels, "fraction": fraction, "snr_db": snr}
        for curve in curves
        for fraction, snr in zip(curve.fractions, curve.snr_db)
    ]
    return pd.DataFrame(rows, columns=["method", "levels", "fraction", "snr_db"])


def spectrum_frame(lam: np.ndarray, values: np.ndarray) -> pd.DataFrame:
    lam = np.asarray(lam, dtype=float)
    return pd.DataFrame({"i": np.arange(lam.size), "lambda": lam, "value": np.asarray(values, dtype=float)})


def write_spectrum_csv(lam: np.ndarray, values: np.ndarray, path: PathLike) -> Path:
    path = _ensure_parent(path)
    spectrum_frame(lam, values).to_csv(path, index=False, encoding="utf-8", float_format="%.17g")
    return path


def filter_frame(spec: FilterBankSpec) -> pd.DataFrame:
    return pd.DataFrame({"i": np.arange(spec.n), "h0": spec.h0, "h1": spec.h1, "g0": spec.g0, "g1": spec.g1})


def write_filter_csv(spec: FilterBankSpec, path: PathLike) -> Path:
    path = _ensure_parent(path)
    filter_frame(spec).to_csv(path, index=False, encoding="utf-8", float_format="%.17g")
    return path


def passband_frame(lam: np.ndarray, results: Dict[FilterDesign, PassbandResult]) -> pd.DataFrame:
    """i, lambda and one E_<design> column per compared design"""
    frame = pd.DataFrame({"i": np.arange(len(lam)), "lambda": np.asarray(lam, dtype=float)})
    for design, result in results.items():
        frame[f"E_{design.value}"] = result.errors
    return frame


def passband_study_frame(study: PassbandStudy) -> pd.DataFrame:
    frame = pd.DataFrame({design.value: values for design, values in study.distances.items()})
    frame.insert(0, "seed", study.seeds)
    return frame


def merged_gains_frame(gains: Dict[str, np.ndarray]) -> pd.DataFrame:
    """i plus one column of length-N merged gains per band"""
    frame = pd.DataFrame({band: np.asarray(values, dtype=float) for band, values in gains.items()})
    frame.insert(0, "i", np.arange(len(frame)))
    return frame
