"""Critically sampled spectral filter banks"""

from .bipartite import (
    BipartiteBlocks,
    Theorem2Report,
    Theorem3Report,
    bipartite_blocks,
    bipartite_polyphase_split,
    kron_reduce,
    verify_theorem2,
    verify_theorem3,
    vertex_domain_transfer,
)
from .merge import MergedBand, MergedBandOperator, lift_gains, merge_octave, merged_lowpass_gains
from .octave import (
    Subband,
    SubbandPyramid,
    analysis_matrix,
    analyze_octave,
    band_ids,
    check_depth,
    synthesize_octave,
)
from .polyphase import PolyphasePair, polyphase_analyze, polyphase_input, polyphase_matrices
from .transform import (
    analyze_one_level,
    merge_spectrum,
    split_spectrum,
    synthesize_one_level,
    transfer_matrix,
)

__all__ = [
    "BipartiteBlocks",
    "Theorem2Report",
    "Theorem3Report",
    "bipartite_blocks",
    "bipartite_polyphase_split",
    "kron_reduce",
    "verify_theorem2",
    "verify_theorem3",
    "vertex_domain_transfer",
    "MergedBand",
    "MergedBandOperator",
    "lift_gains",
    "merge_octave",
    "merged_lowpass_gains",
    "Subband",
    "SubbandPyramid",
    "analysis_matrix",
    "analyze_octave",
    "band_ids",
    "check_depth",
    "synthesize_octave",
    "PolyphasePair",
    "polyphase_analyze",
    "polyphase_input",
    "polyphase_matrices",
    "analyze_one_level",
    "merge_spectrum",
    "split_spectrum",
    "synthesize_one_level",
    "transfer_matrix",
]
