"""Graph construction, validation, generators and edge-list I/O"""

from .graph import (
    Graph,
    OperatorKind,
    OperatorMatrix,
    VertexPartition,
    bipartite_partition,
    build_graph,
    laplacian,
)
from .generators import (
    GeneratorParams,
    GraphModel,
    SensorWeighting,
    block_labels,
    default_clusters,
    generate,
)
from .edge_list import read_edge_list, write_edge_list

__all__ = [
    "Graph",
    "OperatorKind",
    "OperatorMatrix",
    "VertexPartition",
    "bipartite_partition",
    "build_graph",
    "laplacian",
    "GeneratorParams",
    "GraphModel",
    "SensorWeighting",
    "block_labels",
    "default_clusters",
    "generate",
    "read_edge_list",
    "write_edge_list",
]
