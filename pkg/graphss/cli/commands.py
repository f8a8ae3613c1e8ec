"""
Command-line interface.

Every subcommand prints a one-line JSON summary on stdout and exits 0. Library
errors print ``{"error": code, "message": ..., "details": ...}`` on stdout
and exit 2; anything unexpected exits 1. Logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from core.exceptions import ConfigurationError, GraphSSError
from core.logging import StructuredLogger, get_logger
from graphss.cli.config import RunConfig, build_run_config, load_yaml
from graphss.cli.io import read_pyramid, read_signal, write_pyramid, write_signal
from graphss.experiments.metrics import add_noise
from graphss.experiments.passband import passband_compare, passband_study, study_generator_params
from graphss.experiments.protocols import Protocol, method_tag, monte_carlo, nla_curve
from graphss.experiments.reports import (
    filter_frame,
    merged_gains_frame,
    nla_curve_frame,
    passband_frame,
    passband_study_frame,
    write_reports_csv,
    write_reports_json,
    write_spectrum_csv,
)
from graphss.experiments.signals import generate_signal, noisy_exponential_spectrum
from graphss.filterbank.bipartite import verify_theorem2, verify_theorem3
from graphss.filterbank.merge import merge_octave
from graphss.filterbank.octave import analyze_octave, synthesize_octave
from graphss.filterbank.polyphase import polyphase_matrices
from graphss.filterbank.transform import transfer_matrix
from graphss.filters.designs import PR_TOLERANCE, FilterDesign, design_filter_bank, design_octave, verify_pr
from graphss.graph.edge_list import read_edge_list, write_edge_list
from graphss.graph.generators import GraphModel, generate
from graphss.graph.graph import Graph, OperatorKind
from graphss.spectral.basis import SpectralBasis, gft
from graphss.spectral.cache import BasisCache, basis_for

logger = get_logger(__name__)

Handler = Callable[[RunConfig, BasisCache], Dict[str, Any]]

# namespace entries that are not RunConfig fields
_CONTROL_KEYS = {"command", "config", "log_level", "handler"}


# ============================================================================
# SHARED HELPERS
# ============================================================================


def _load_graph(config: RunConfig, default_model: GraphModel = GraphModel.RANDOM_SENSOR) -> Graph:
    if config.graph_file is not None:
        return read_edge_list(config.graph_file)
    return generate(config.graph or default_model, config.n, config.generator_params(), seed=config.seed)


def _graph_meta(config: RunConfig, graph: Graph, default_model: GraphModel) -> Dict[str, Any]:
    """Everything needed to rebuild the same graph and basis"""
    meta: Dict[str, Any] = {
        "n": graph.n,
        "seed": config.seed,
        "laplacian": config.laplacian.value,
        "design": config.design.value,
        "levels": config.levels,
        "generator": config.generator_params().model_dump(mode="json"),
    }
    if config.graph_file is not None:
        meta["graph_file"] = str(config.graph_file)
    else:
        meta["graph"] = (config.graph or default_model).value
    return meta


def _signal(config: RunConfig, graph: Graph, basis: SpectralBasis) -> np.ndarray:
    if config.input is not None:
        return read_signal(config.input)
    return generate_signal(config.signal_spec(), basis, graph, seed=config.seed)


def _require_output(config: RunConfig, command: str) -> Path:
    if config.output is None:
        raise ConfigurationError(f"{command} needs --output")
    return config.output


def _finite(value: float) -> Any:
    """JSON-friendly float: +inf becomes the string "inf" """
    return value if np.isfinite(value) else str(value)


# ============================================================================
# COMMANDS
# ============================================================================


def cmd_gen_graph(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    graph = _load_graph(config)
    summary: Dict[str, Any] = {"n": graph.n, "edges": graph.edge_count, "connected": graph.is_connected()}
    if config.output is not None:
        write_edge_list(graph, config.output)
        summary["output"] = str(config.output)
    return summary


def cmd_gen_signal(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    graph = _load_graph(config)
    basis = basis_for(graph, config.laplacian, cache)
    f = generate_signal(config.signal_spec(), basis, graph, seed=config.seed)
    if config.sigma:
        f = add_noise(f, config.sigma, config.seed)

    summary: Dict[str, Any] = {"n": graph.n, "signal": config.signal.value, "norm": float(np.linalg.norm(f))}
    if config.output is not None:
        write_signal(f, config.output)
        summary["output"] = str(config.output)
    if config.spectrum_output is not None:
        write_spectrum_csv(basis.lam, gft(basis, f), config.spectrum_output)
        summary["spectrum_output"] = str(config.spectrum_output)
    return summary


def cmd_decompose(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    output = _require_output(config, "decompose")
    graph = _load_graph(config)
    basis = basis_for(graph, config.laplacian, cache)
    f = _signal(config, graph, basis)
    specs = design_octave(config.design, graph.n, config.levels)

    pyramid = analyze_octave(basis, specs, f, config.levels)
    write_pyramid(pyramid, output, meta=_graph_meta(config, graph, GraphModel.RANDOM_SENSOR))
    return {"n": graph.n, "levels": config.levels, "bands": pyramid.band_ids, "output": str(output)}


def cmd_reconstruct(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    if config.input is None:
        raise ConfigurationError("reconstruct needs --input <pyramid.json>")
    output = _require_output(config, "reconstruct")
    pyramid, _ = read_pyramid(config.input)
    graph = _load_graph(config)
    basis = basis_for(graph, config.laplacian, cache)
    specs = design_octave(config.design, graph.n, pyramid.levels)

    f = synthesize_octave(basis, specs, pyramid)
    write_signal(f, output)
    return {"n": graph.n, "levels": pyramid.levels, "output": str(output)}


def cmd_nla(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    graph = _load_graph(config)
    signal = _signal(config, graph, basis_for(graph, OperatorKind.COMBINATORIAL, cache))
    curve = nla_curve(graph, config.design, config.laplacian, config.fractions, config.levels, signal, cache)

    if config.output is not None:
        config.output.parent.mkdir(parents=True, exist_ok=True)
        nla_curve_frame([curve]).to_csv(config.output, index=False, encoding="utf-8")
    return {"method": curve.method, "fractions": curve.fractions, "snr_db": [_finite(s) for s in curve.snr_db]}


def cmd_denoise(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    sigma = 0.25 if config.sigma is None else config.sigma
    graph = _load_graph(config)
    signal = _signal(config, graph, basis_for(graph, OperatorKind.COMBINATORIAL, cache))
    basis = basis_for(graph, config.laplacian, cache)
    specs = design_octave(config.design, graph.n, config.levels)

    noisy = monte_carlo(Protocol.NOISY, config.runs, config.seed, signal=signal, sigma=sigma, method="noisy")
    report = monte_carlo(
        Protocol.DENOISE,
        config.runs,
        config.seed,
        signal=signal,
        basis=basis,
        specs=specs,
        levels=config.levels,
        sigma=sigma,
        factor=config.threshold_factor,
        method=method_tag(config.design, config.laplacian),
        workers=config.workers,
    )

    summary: Dict[str, Any] = {
        "method": report.method,
        "sigma": sigma,
        "runs": report.runs,
        "mean_snr_db": _finite(report.mean_snr_db),
        "noisy_mean_snr_db": _finite(noisy.mean_snr_db),
    }
    if config.output is not None:
        if config.output.suffix.lower() == ".json":
            write_reports_json([noisy, report], config.output)
        else:
            write_reports_csv([report], config.output)
        summary["output"] = str(config.output)
    return summary


def cmd_verify_pr(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    spec = design_filter_bank(config.design, config.n)
    report = verify_pr(spec)
    pair = polyphase_matrices(spec)
    eye = spec.c2 * np.eye(spec.n)
    tolerance = PR_TOLERANCE[spec.design]
    return {
        "design": spec.design.value,
        "n": spec.n,
        "residual_identity": report.max_residual_identity,
        "residual_alias": report.max_residual_alias,
        "transfer_residual": float(np.max(np.abs(transfer_matrix(spec) - eye))),
        "polyphase_residual": float(np.max(np.abs(pair.product() - eye))),
        "tolerance": tolerance,
        "passes": report.passes(tolerance),
    }


def cmd_verify_theorem2(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    graph = _load_graph(config, GraphModel.RANDOM_BIPARTITE)
    if config.input is not None:
        f = read_signal(config.input)
    else:
        f = np.random.default_rng(config.seed).standard_normal(graph.n)
    report = verify_theorem2(graph, f)
    return {"n": graph.n, **report.model_dump()}


def cmd_verify_theorem3(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    graph = _load_graph(config, GraphModel.RANDOM_BIPARTITE)
    report = verify_theorem3(graph, design_filter_bank(config.design, graph.n))
    return {"n": graph.n, "design": config.design.value, **report.model_dump()}


def cmd_filter_dump(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    output = _require_output(config, "filter-dump")
    specs = design_octave(config.design, config.n, config.levels)
    output.parent.mkdir(parents=True, exist_ok=True)
    filter_frame(specs[0]).to_csv(output, index=False, encoding="utf-8", float_format="%.17g")
    summary: Dict[str, Any] = {"design": config.design.value, "n": config.n, "output": str(output)}

    if config.spectrum_output is not None:
        gains = merge_octave(specs, config.levels).gains()
        config.spectrum_output.parent.mkdir(parents=True, exist_ok=True)
        merged_gains_frame(gains).to_csv(config.spectrum_output, index=False, encoding="utf-8", float_format="%.17g")
        summary["spectrum_output"] = str(config.spectrum_output)
    return summary


def cmd_passband_compare(config: RunConfig, cache: BasisCache) -> Dict[str, Any]:
    sigma = 0.05 if config.sigma is None else config.sigma
    params = config.generator_params()
    study = passband_study(
        n=config.n,
        runs=config.runs,
        base_seed=config.seed,
        concentrated=params.concentrated,
        sigma=sigma,
        kind=config.laplacian,
        params=params,
        cache=cache,
    )

    summary: Dict[str, Any] = {
        "n": config.n,
        "concentrated": params.concentrated,
        "runs": config.runs,
        "mean_distance": {d.value: study.mean_distance(d) for d in study.distances},
        "ideal_farther": {d.value: share for d, share in study.ideal_farther.items()},
    }
    if config.output is not None:
        config.output.parent.mkdir(parents=True, exist_ok=True)
        passband_study_frame(study).to_csv(config.output, index=False, encoding="utf-8")
        summary["output"] = str(config.output)
    if config.spectrum_output is not None:
        study_params = study_generator_params(params, params.concentrated)
        graph = generate(GraphModel.RANDOM_SENSOR, config.n, study_params, seed=config.seed)
        basis = basis_for(graph, config.laplacian, cache)
        results = passband_compare(basis, noisy_exponential_spectrum(basis, sigma, config.seed))
        config.spectrum_output.parent.mkdir(parents=True, exist_ok=True)
        passband_frame(basis.lam, results).to_csv(config.spectrum_output, index=False, encoding="utf-8")
        summary["spectrum_output"] = str(config.spectrum_output)
    return summary


COMMANDS: Dict[str, Handler] = {
    "gen-graph": cmd_gen_graph,
    "gen-signal": cmd_gen_signal,
    "decompose": cmd_decompose,
    "reconstruct": cmd_reconstruct,
    "nla": cmd_nla,
    "denoise": cmd_denoise,
    "verify-pr": cmd_verify_pr,
    "verify-theorem2": cmd_verify_theorem2,
    "verify-theorem3": cmd_verify_theorem3,
    "filter-dump": cmd_filter_dump,
    "passband-compare": cmd_passband_compare,
}


# ============================================================================
# PARSER
# ============================================================================


def _option(parser: argparse.ArgumentParser, *flags: str, **kwargs: Any) -> None:
    # absent flags stay out of the namespace so lower config layers show through
    kwargs.setdefault("default", argparse.SUPPRESS)
    parser.add_argument(*flags, **kwargs)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _option(common, "--config", type=Path, help="YAML run configuration")
    _option(common, "--no-cache", dest="cache", action="store_false", help="Disable the basis cache")
    _option(common, "--log-level", help="Log level (DEBUG, INFO, ...)")
    _option(common, "--seed", type=int, help="Seed for every random choice in the run")
    return common


def _graph_options(parser: argparse.ArgumentParser) -> None:
    _option(parser, "--graph", choices=[m.value for m in GraphModel], help="Generator model")
    _option(parser, "--graph-file", type=Path, help="Edge-list file instead of a generator")
    _option(parser, "--n", type=int, help="Vertex count")
    _option(parser, "--concentrated", action="store_true", help="Concentrated sensor layout")
    _option(parser, "--laplacian", choices=[k.value for k in OperatorKind], help="Variation operator")


def _filter_options(parser: argparse.ArgumentParser, levels: bool = True) -> None:
    _option(parser, "--design", choices=[d.value for d in FilterDesign], help="Filter bank design")
    if levels:
        _option(parser, "--levels", type=int, help="Octave levels")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphss",
        description="Critically sampled graph filter banks with spectral-domain sampling",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, parents=[common], help=help_text)

    p = add("gen-graph", "Generate a graph and write its edge list")
    _graph_options(p)
    _option(p, "--output", type=Path)

    p = add("gen-signal", "Generate a test signal")
    _graph_options(p)
    _option(p, "--signal", choices=["smooth", "localized", "mixed"])
    _option(p, "--sigma", type=float, help="Add vertex-domain noise of this level")
    _option(p, "--output", type=Path)
    _option(p, "--spectrum-output", type=Path, help="CSV of (i, lambda, value)")

    p = add("decompose", "Octave analysis of a signal into a pyramid file")
    _graph_options(p)
    _filter_options(p)
    _option(p, "--signal", choices=["smooth", "localized", "mixed"])
    _option(p, "--input", type=Path, help="Signal CSV; generated when omitted")
    _option(p, "--output", type=Path)

    p = add("reconstruct", "Synthesize a signal from a pyramid file")
    _graph_options(p)
    _filter_options(p, levels=False)
    _option(p, "--input", type=Path, help="Pyramid JSON from decompose")
    _option(p, "--output", type=Path)

    p = add("nla", "Nonlinear approximation SNR per kept fraction")
    _graph_options(p)
    _filter_options(p)
    _option(p, "--signal", choices=["smooth", "localized", "mixed"])
    _option(p, "--input", type=Path)
    _option(p, "--fraction", dest="fractions", type=float, nargs="+")
    _option(p, "--output", type=Path)

    p = add("denoise", "Monte Carlo hard-threshold denoising")
    _graph_options(p)
    _filter_options(p)
    _option(p, "--signal", choices=["smooth", "localized", "mixed"])
    _option(p, "--input", type=Path)
    _option(p, "--sigma", type=float)
    _option(p, "--runs", type=int)
    _option(p, "--threshold-factor", type=float)
    _option(p, "--workers", type=int)
    _option(p, "--output", type=Path, help="CSV report, or full JSON when the name ends in .json")

    p = add("verify-pr", "Perfect-reconstruction residuals of a design")
    _filter_options(p, levels=False)
    _option(p, "--n", type=int)

    p = add("verify-theorem2", "Spectral vs vertex downsampling on a bipartite graph")
    _graph_options(p)
    _option(p, "--input", type=Path)

    p = add("verify-theorem3", "Vertex-domain transfer of a spectral PR design on a bipartite graph")
    _graph_options(p)
    _filter_options(p, levels=False)

    p = add("filter-dump", "Write filter gains as CSV")
    _filter_options(p)
    _option(p, "--n", type=int)
    _option(p, "--output", type=Path)
    _option(p, "--spectrum-output", type=Path, help="Merged per-band gains")

    p = add("passband-compare", "Compare low-pass outputs against the value-ideal filter")
    _option(p, "--n", type=int)
    _option(p, "--concentrated", action="store_true")
    _option(p, "--laplacian", choices=[k.value for k in OperatorKind])
    _option(p, "--sigma", type=float)
    _option(p, "--runs", type=int)
    _option(p, "--output", type=Path)
    _option(p, "--spectrum-output", type=Path, help="Per-index squared errors for the first seed")

    return parser


# ============================================================================
# ENTRY POINT
# ============================================================================


def _config_layers(args: argparse.Namespace) -> List[Optional[Dict[str, Any]]]:
    flags = {k: v for k, v in vars(args).items() if k not in _CONTROL_KEYS}
    yaml_layer = load_yaml(args.config) if getattr(args, "config", None) else None

    meta_layer = None
    if args.command == "reconstruct" and flags.get("input") is not None:
        _, meta = read_pyramid(flags["input"])
        meta_layer = meta
    return [yaml_layer, meta_layer, flags]


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, dispatch, print the summary line; returns the exit status"""
    args = build_parser().parse_args(argv)
    if getattr(args, "log_level", None):
        StructuredLogger.configure(args.log_level)

    command = args.command
    try:
        config = build_run_config(*_config_layers(args))
        summary = COMMANDS[command](config, BasisCache(enabled=config.cache))
    except GraphSSError as exc:
        logger.run_event(command, exc.code, message=exc.message)
        print(json.dumps(exc.to_dict(), default=str))
        return 2
    except Exception as exc:  # noqa: BLE001
        logger.error(f"Unhandled exception: {exc}", exc_type=type(exc).__name__, command=command)
        print(json.dumps({"error": "internal", "message": str(exc)}))
        return 1

    logger.run_event(command, "success", seed=config.seed)
    print(json.dumps({"command": command, **summary}, default=str))
    return 0


def main() -> None:
    sys.exit(run())
