"""Spectral filter bank designs"""

from .designs import (
    PR_TOLERANCE,
    FilterBankSpec,
    FilterDesign,
    PrReport,
    cdf97_biorthogonal_design,
    design_filter_bank,
    design_octave,
    ideal_design,
    meyer_orthogonal_design,
    value_ideal_gains,
    verify_pr,
)
from .prototypes import (
    cdf97_responses,
    cdf97_taps,
    check_half_band,
    meyer_auxiliary,
    meyer_prototype,
    spectral_frequencies,
    zero_phase_response,
)

__all__ = [
    "PR_TOLERANCE",
    "FilterBankSpec",
    "FilterDesign",
    "PrReport",
    "cdf97_biorthogonal_design",
    "design_filter_bank",
    "design_octave",
    "ideal_design",
    "meyer_orthogonal_design",
    "value_ideal_gains",
    "verify_pr",
    "cdf97_responses",
    "cdf97_taps",
    "check_half_band",
    "meyer_auxiliary",
    "meyer_prototype",
    "spectral_frequencies",
    "zero_phase_response",
]
