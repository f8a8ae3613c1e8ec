"""
graphss exceptions

Every error raised on purpose by the library derives from ``GraphSSError``
and carries a stable ``code`` used in the CLI's error JSON.
"""

from typing import Any, Dict, Optional


class GraphSSError(Exception):
    """Base exception for graphss"""
    code = "graphss_error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, "details": self.details}


class ConfigurationError(GraphSSError):
    """Invalid run configuration or parameter"""
    code = "configuration"


# ============================================================================
# GRAPH
# ============================================================================

class GraphValidationError(GraphSSError):
    """Edge list violates a graph invariant"""
    code = "graph_validation"


class SelfLoopError(GraphValidationError):
    code = "self_loop"

    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}", vertex=vertex)
        self.vertex = vertex


class NegativeWeightError(GraphValidationError):
    code = "negative_weight"

    def __init__(self, u: int, v: int, weight: float):
        super().__init__(f"edge ({u}, {v}) has invalid weight {weight}", u=u, v=v, weight=weight)
        self.weight = weight


class IndexOutOfRangeError(GraphValidationError):
    code = "index_out_of_range"

    def __init__(self, index: int, bound: int):
        super().__init__(f"index {index} outside [0, {bound})", index=index, bound=bound)
        self.index = index
        self.bound = bound


class DuplicateEdgeError(GraphValidationError):
    code = "duplicate_edge"

    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})", u=u, v=v)


class IsolatedVertexError(GraphSSError):
    """Zero-degree vertex where a normalized operator is requested"""
    code = "isolated_vertex"

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has zero degree", vertex=vertex)
        self.vertex = vertex


class ConnectivityFailureError(GraphSSError):
    """Generator could not produce a connected graph within the retry budget"""
    code = "connectivity_failure"

    def __init__(self, model: str, attempts: int):
        super().__init__(f"{model} graph still disconnected after {attempts} attempts", model=model, attempts=attempts)
        self.attempts = attempts


class EdgeListFormatError(GraphSSError):
    """Malformed edge-list file"""
    code = "edge_list_format"

    def __init__(self, message: str, line_number: Optional[int] = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message, line=line_number)
        self.line_number = line_number


# ============================================================================
# SPECTRAL / SAMPLING
# ============================================================================

class EigensolverFailureError(GraphSSError):
    code = "eigensolver_failure"


class DimensionMismatchError(GraphSSError):
    code = "dimension_mismatch"

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        super().__init__(f"{what} has length {actual}, expected {expected}", expected=expected, actual=actual)
        self.expected = expected
        self.actual = actual


class OddLengthError(GraphSSError):
    code = "odd_length"

    def __init__(self, length: int):
        super().__init__(f"length {length} is not even", length=length)
        self.length = length


class LengthMismatchError(GraphSSError):
    code = "length_mismatch"

    def __init__(self, expected: int, actual: int):
        super().__init__(f"got {actual} samples for {expected} positions", expected=expected, actual=actual)


# ============================================================================
# FILTERS / FILTERBANK
# ============================================================================

class FilterDesignError(GraphSSError):
    code = "filter_design"


class DepthTooLargeError(GraphSSError):
    code = "depth_too_large"

    def __init__(self, n: int, levels: int):
        super().__init__(f"N={n} cannot be halved evenly {levels} times", n=n, levels=levels)
        self.n = n
        self.levels = levels


class SingularComplementBlockError(GraphSSError):
    code = "singular_complement_block"

    def __init__(self, condition: float):
        super().__init__(f"complement block condition number {condition:.3e}", condition=condition)
        self.condition = condition


class NotBipartiteError(GraphSSError):
    code = "not_bipartite"

    def __init__(self, message: str = "graph is not bipartite"):
        super().__init__(message)


class UnequalHalvesError(GraphSSError):
    code = "unequal_halves"

    def __init__(self, size_l: int, size_h: int):
        super().__init__(f"bipartition sizes differ: {size_l} vs {size_h}", size_l=size_l, size_h=size_h)


# ============================================================================
# EXPERIMENTS
# ============================================================================

class RangeOutOfSpectrumError(GraphSSError):
    code = "range_out_of_spectrum"

    def __init__(self, lo: int, hi: int, n: int):
        super().__init__(f"index range ({lo}, {hi}) not within [0, {n})", lo=lo, hi=hi, n=n)


class EmptyClusterError(GraphSSError):
    code = "empty_cluster"

    def __init__(self, cluster: int):
        super().__init__(f"localized component for cluster {cluster} vanishes", cluster=cluster)
        self.cluster = cluster


class ZeroReferenceError(GraphSSError):
    code = "zero_reference"

    def __init__(self):
        super().__init__("reference signal has zero norm")
