"""
Edge-list text format.

    n <count>
    u v w
    ...

Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from core.exceptions import EdgeListFormatError, GraphValidationError
from graphss.graph.graph import Graph, build_graph

PathLike = Union[str, Path]


def read_edge_list(path: PathLike) -> Graph:
    """Parse an edge-list file, reporting violations with line numbers"""
    n = None
    edges = []
    seen_lines = {}

    with open(path, "r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()

            if n is None:
                if len(tokens) != 2 or tokens[0] != "n":
                    raise EdgeListFormatError("expected header 'n <count>'", line_number)
                try:
                    n = int(tokens[1])
                except ValueError:
                    raise EdgeListFormatError(f"bad vertex count {tokens[1]!r}", line_number) from None
                continue

            if len(tokens) != 3:
                raise EdgeListFormatError("expected 'u v w'", line_number)
            try:
                edge = (int(tokens[0]), int(tokens[1]), float(tokens[2]))
            except ValueError:
                raise EdgeListFormatError(f"cannot parse {line!r}", line_number) from None

            # validate incrementally so the failing line can be named
            try:
                build_graph(n, [edge])
            except GraphValidationError as exc:
                raise EdgeListFormatError(exc.message, line_number) from exc
            key = (min(edge[0], edge[1]), max(edge[0], edge[1]))
            if key in seen_lines:
                raise EdgeListFormatError(
                    f"duplicate edge {key} (first on line {seen_lines[key]})", line_number
                )
            seen_lines[key] = line_number
            edges.append(edge)

    if n is None:
        raise EdgeListFormatError("missing header 'n <count>'")
    return build_graph(n, edges)


def write_edge_list(graph: Graph, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"n {graph.n}\n")
        for u, v, w in graph.edges:
            handle.write(f"{u} {v} {w!r}\n")
