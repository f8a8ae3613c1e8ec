"""
Run configuration.

Values are layered: model defaults, then an optional YAML file, then (for
``reconstruct``) the metadata stored with the pyramid, then command-line flags.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.config import settings
from core.exceptions import ConfigurationError
from graphss.experiments.signals import SignalModel, SignalSpec
from graphss.filters.designs import FilterDesign
from graphss.graph.generators import GeneratorParams, GraphModel
from graphss.graph.graph import OperatorKind


class RunConfig(BaseModel):
    """Everything one CLI invocation needs"""

    model_config = ConfigDict(extra="forbid")

    # graph source: an edge-list file wins over a generator
    graph: Optional[GraphModel] = None
    graph_file: Optional[Path] = None
    n: int = Field(default=100, ge=2)
    generator: GeneratorParams = Field(default_factory=GeneratorParams)
    concentrated: bool = False
    seed: int = Field(default_factory=lambda: settings.default_seed)

    laplacian: OperatorKind = OperatorKind.COMBINATORIAL
    design: FilterDesign = FilterDesign.MEYER
    levels: int = Field(default=2, ge=1)

    signal: SignalModel = SignalModel.SMOOTH
    signal_params: SignalSpec = Field(default_factory=SignalSpec)
    sigma: Optional[float] = Field(default=None, ge=0)
    runs: int = Field(default=1, ge=1)
    fractions: List[float] = Field(default_factory=lambda: [0.25])
    threshold_factor: float = Field(default=3.0, ge=0)
    workers: Optional[int] = Field(default=None, ge=1)

    input: Optional[Path] = None
    output: Optional[Path] = None
    spectrum_output: Optional[Path] = None
    cache: bool = Field(default_factory=lambda: settings.cache_enabled)

    @field_validator("graph_file", "input")
    @classmethod
    def check_exists(cls, v: Optional[Path]) -> Optional[Path]:
        if v is not None and not Path(v).exists():
            raise ValueError(f"file not found: {v}")
        return v

    @field_validator("fractions")
    @classmethod
    def check_fractions(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError("at least one fraction is required")
        for fraction in v:
            if not 0.0 < fraction <= 1.0:
                raise ValueError(f"fraction must be in (0, 1], got {fraction}")
        return v

    def generator_params(self) -> GeneratorParams:
        return self.generator.model_copy(update={"concentrated": self.concentrated or self.generator.concentrated})

    def signal_spec(self) -> SignalSpec:
        return self.signal_params.model_copy(update={"model": self.signal})


def load_yaml(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigurationError(f"cannot read config {path}: {exc}", path=str(path)) from exc
    if not isinstance(data, dict):
        raise ConfigurationError(f"config {path} must be a mapping", path=str(path))
    return data


def build_run_config(*layers: Optional[Dict[str, Any]]) -> RunConfig:
    """
    Merge layers left to right (later wins) and validate.

    Raises:
        ConfigurationError: unknown keys or invalid values
    """
    merged: Dict[str, Any] = {}
    for layer in layers:
        if layer:
            merged.update({k: v for k, v in layer.items() if v is not None})
    try:
        return RunConfig.model_validate(merged)
    except ValidationError as exc:
        problems = [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()]
        raise ConfigurationError("invalid run configuration", problems=problems) from exc
