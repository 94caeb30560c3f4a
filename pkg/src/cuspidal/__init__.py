"""Exact obstruction checks and candidate enumeration for rational cuspidal
curves in Hirzebruch surfaces."""

from .core import (
    CurveType,
    CuspConfiguration,
    GenusMismatchError,
    PuiseuxCusp,
    Rational,
    make_curve_type,
    make_cusp,
)
from .semigroups import (
    CountingFunction,
    Semigroup,
    counting_function,
    curve_r_function,
    cusp_semigroup,
    infimum_convolution,
    semigroup_from_generators,
)
from .hf import (
    HfReport,
    HfWitness,
    d_invariant,
    hf_check,
    max_p_over_presentations,
    multiplicity_bound_check,
    p_bound,
)
from .spectra import (
    AlexanderData,
    SemicontinuityReport,
    SemicontinuityWitness,
    SignatureProfile,
    SpectrumMultiset,
    cusp_spectrum,
    half_window_counts,
    semicontinuity_check,
    signature_profile,
    spectrum_at_infinity_derived,
    spectrum_at_infinity_table,
)
from .dedekind import (
    LimitReport,
    dedekind_sum,
    rademacher_sum,
    sawtooth,
    section_sums,
    verify_limits,
)
from .enumeration import (
    CandidateCapExceededError,
    CandidateVerdict,
    enumerate_configurations,
    enumerate_unicuspidal,
    evaluate_candidate,
    run_pipeline,
)

__all__ = [
    "AlexanderData",
    "CandidateCapExceededError",
    "CandidateVerdict",
    "CountingFunction",
    "CurveType",
    "CuspConfiguration",
    "GenusMismatchError",
    "HfReport",
    "HfWitness",
    "LimitReport",
    "PuiseuxCusp",
    "Rational",
    "SemicontinuityReport",
    "SemicontinuityWitness",
    "Semigroup",
    "SignatureProfile",
    "SpectrumMultiset",
    "counting_function",
    "curve_r_function",
    "cusp_semigroup",
    "cusp_spectrum",
    "d_invariant",
    "dedekind_sum",
    "enumerate_configurations",
    "enumerate_unicuspidal",
    "evaluate_candidate",
    "half_window_counts",
    "hf_check",
    "infimum_convolution",
    "make_curve_type",
    "make_cusp",
    "max_p_over_presentations",
    "multiplicity_bound_check",
    "p_bound",
    "rademacher_sum",
    "run_pipeline",
    "sawtooth",
    "section_sums",
    "semicontinuity_check",
    "semigroup_from_generators",
    "signature_profile",
    "spectrum_at_infinity_derived",
    "spectrum_at_infinity_table",
    "verify_limits",
]

__version__ = "0.1.0"
