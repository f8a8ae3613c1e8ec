"""Command-line surface, run configuration and file I/O"""

from .commands import COMMANDS, build_parser, main, run
from .config import RunConfig, build_run_config, load_yaml
from .io import read_pyramid, read_signal, write_pyramid, write_signal

__all__ = [
    "COMMANDS",
    "build_parser",
    "main",
    "run",
    "RunConfig",
    "build_run_config",
    "load_yaml",
    "read_pyramid",
    "read_signal",
    "write_pyramid",
    "write_signal",
]
