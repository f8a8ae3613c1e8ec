"""
Graph construction and variation operators.

Graphs are undirected, weighted, without self-loops. They are immutable after
construction; the dense adjacency matrix is computed once on first use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.config import settings
from core.exceptions import (
    DuplicateEdgeError,
    GraphValidationError,
    IndexOutOfRangeError,
    IsolatedVertexError,
    NegativeWeightError,
    SelfLoopError,
)

Edge = Tuple[int, int, float]


class OperatorKind(str, Enum):
    """Variation operator used to define graph frequencies"""
    COMBINATORIAL = "combinatorial"
    NORMALIZED = "normalized"


@dataclass(frozen=True)
class Graph:
    """
    Undirected weighted graph.

    ``coords`` (geometric generators) and ``labels`` (planted communities)
    are optional metadata and take no part in equality of structure.
    """
    n: int
    edges: Tuple[Edge, ...]
    coords: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    labels: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            a[u, v] = w
            a[v, u] = w
        a.setflags(write=False)
        return a

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_weighted_edges_from((u, v, w) for u, v, w in self.edges if w > 0)
        return g

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return nx.is_connected(self.to_networkx())


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense symmetric variation operator"""
    kind: OperatorKind
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise GraphValidationError(f"operator must be square, got shape {values.shape}")
        if not np.allclose(values, values.T, rtol=0.0, atol=settings.symmetry_tol):
            raise GraphValidationError("operator is not symmetric")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class VertexPartition:
    """Two disjoint vertex sets covering {0..N-1}"""
    set_l: Tuple[int, ...]
    set_h: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.set_l) + len(self.set_h)

    @property
    def balanced(self) -> bool:
        return len(self.set_l) == len(self.set_h)


def build_graph(n: int, edges: Iterable[Sequence[float]], **metadata) -> Graph:
    """
    Validate an edge list and build a Graph.

    Args:
        n: Vertex count
        edges: (u, v, w) triples
        **metadata: ``coords`` / ``labels`` passed through to the Graph

    Raises:
        SelfLoopError, NegativeWeightError, IndexOutOfRangeError, DuplicateEdgeError
    """
    if n < 1:
        raise GraphValidationError(f"vertex count must be positive, got {n}")

    seen = set()
    checked = []
    for edge in edges:
        u, v, w = int(edge[0]), int(edge[1]), float(edge[2])
        for index in (u, v):
            if not 0 <= index < n:
                raise IndexOutOfRangeError(index, n)
        if u == v:
            raise SelfLoopError(u)
        if not math.isfinite(w) or w < 0:
            raise NegativeWeightError(u, v, w)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(*key)
        seen.add(key)
        checked.append((u, v, w))

    return Graph(n=n, edges=tuple(checked), **metadata)


def laplacian(g: Graph, kind: OperatorKind) -> OperatorMatrix:
    """
    Combinatorial L = D - A or symmetric normalized D^-1/2 L D^-1/2.

    Raises:
        IsolatedVertexError: zero-degree vertex with the normalized kind
    """
    a = g.adjacency
    d = a.sum(axis=1)
    lap = np.diag(d) - a

    if OperatorKind(kind) is OperatorKind.NORMALIZED:
        isolated = np.flatnonzero(d <= 0)
        if isolated.size:
            raise IsolatedVertexError(int(isolated[0]))
        inv_sqrt = 1.0 / np.sqrt(d)
        lap = inv_sqrt[:, None] * lap * inv_sqrt[None, :]
        lap = 0.5 * (lap + lap.T)
        return OperatorMatrix(OperatorKind.NORMALIZED, lap)

    return OperatorMatrix(OperatorKind.COMBINATORIAL, lap)


def bipartite_partition(g: Graph) -> Optional[VertexPartition]:
    """
    BFS 2-coloring per connected component, or None when an odd cycle exists.

    The first vertex of every component is colored into ``set_l``.
    Zero-weight edges are ignored.
    """
    graph = g.to_networkx()
    try:
        colors = nx.bipartite.color(graph)
    except nx.NetworkXError:
        return None

    left, right = [], []
    for component in nx.connected_components(graph):
        root_color = colors[min(component)]
        for v in component:
            (left if colors[v] == root_color else right).append(v)

    return VertexPartition(set_l=tuple(sorted(left)), set_h=tuple(sorted(right)))
