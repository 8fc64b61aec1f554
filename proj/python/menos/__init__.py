"""Fisher-information toolkit for finite-dimensional quantum estimation.

Computes classical/quantum Fisher information, the worst-case
measurement-noise susceptibility chi of a POVM, QCRB-saturation
certificates, and the interferometer / super-resolution model families.
"""

from ._core import (
    Povm,
    ModelAtPoint,
    OutcomeStats,
    MenosReport,
    SaturationReport,
    ChiQResult,
    eig_hermitian,
    trace_norm,
    psd_sqrt,
    sld,
    qfi,
    validate,
    projective_from_states,
    equator_projective_povm,
    mix,
    coarse_grain,
    pad_with_zero_elements,
    random_povm,
    random_equator_povm,
    pure_canonicalize,
    interferometer_stats,
    interferometer_model,
    superres_constants,
    superres_model,
    hg_mode_stats,
    outcome_stats,
    stats_from_analytic,
    crb,
    g_functional,
    chi_pair,
    chi_menos,
    chi_bruteforce,
    check_saturation,
    is_equator_povm,
    superres_family_povm,
    minimize_chi_q_superres,
    povm_to_json,
    povm_from_json,
    model_to_json,
    model_from_json,
)

__all__ = [
    "Povm",
    "ModelAtPoint",
    "OutcomeStats",
    "MenosReport",
    "SaturationReport",
    "ChiQResult",
    "eig_hermitian",
    "trace_norm",
    "psd_sqrt",
    "sld",
    "qfi",
    "validate",
    "projective_from_states",
    "equator_projective_povm",
    "mix",
    "coarse_grain",
    "pad_with_zero_elements",
    "random_povm",
    "random_equator_povm",
    "pure_canonicalize",
    "interferometer_stats",
    "interferometer_model",
    "superres_constants",
    "superres_model",
    "hg_mode_stats",
    "outcome_stats",
    "stats_from_analytic",
    "crb",
    "g_functional",
    "chi_pair",
    "chi_menos",
    "chi_bruteforce",
    "check_saturation",
    "is_equator_povm",
    "superres_family_povm",
    "minimize_chi_q_superres",
    "povm_to_json",
    "povm_from_json",
    "model_to_json",
    "model_from_json",
]
