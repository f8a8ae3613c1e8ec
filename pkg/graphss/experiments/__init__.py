"""Test signals, evaluation protocols and report writers"""

from .metrics import add_noise, snr_db
from .passband import PassbandResult, PassbandStudy, passband_compare, passband_study, study_generator_params
from .protocols import (
    ExperimentReport,
    NlaCurve,
    Protocol,
    denoise,
    denoising_table,
    hard_threshold,
    keep_count,
    keep_largest,
    method_tag,
    monte_carlo,
    nla,
    nla_curve,
)
from .reports import (
    filter_frame,
    merged_gains_frame,
    nla_curve_frame,
    passband_frame,
    passband_study_frame,
    report_frame,
    spectrum_frame,
    write_filter_csv,
    write_reports_csv,
    write_reports_json,
    write_spectrum_csv,
)
from .signals import (
    SignalModel,
    SignalSpec,
    default_ranges,
    gen_localized_signal,
    gen_mixed_signal,
    gen_smooth_signal,
    generate_signal,
    noisy_exponential_spectrum,
)

__all__ = [
    "add_noise",
    "snr_db",
    "PassbandResult",
    "PassbandStudy",
    "passband_compare",
    "passband_study",
    "study_generator_params",
    "ExperimentReport",
    "NlaCurve",
    "Protocol",
    "denoise",
    "denoising_table",
    "hard_threshold",
    "keep_count",
    "keep_largest",
    "method_tag",
    "monte_carlo",
    "nla",
    "nla_curve",
    "filter_frame",
    "merged_gains_frame",
    "nla_curve_frame",
    "passband_frame",
    "passband_study_frame",
    "report_frame",
    "spectrum_frame",
    "write_filter_csv",
    "write_reports_csv",
    "write_reports_json",
    "write_spectrum_csv",
    "SignalModel",
    "SignalSpec",
    "default_ranges",
    "gen_localized_signal",
    "gen_mixed_signal",
    "gen_smooth_signal",
    "generate_signal",
    "noisy_exponential_spectrum",
]
