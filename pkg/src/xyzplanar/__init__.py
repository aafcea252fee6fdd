"""Decoding engine and experiment harness for the planar and XYZ planar
codes under biased Pauli noise."""

from .codes import (
    PLANAR,
    XYZ_PLANAR,
    CodeLayout,
    build_code,
    build_planar,
    build_xyz_planar,
    compute_logicals,
    validate_layout,
)
from .decoder import (
    MwpmDecoder,
    PmwpmDecoder,
    WeightTable,
    build_weight_table,
    decode_mwpm,
    decode_pmwpm,
    parity_probs,
    posterior,
)
from .experiment import (
    BatchStats,
    FitResult,
    TrialConfig,
    fit_threshold,
    is_logical_failure,
    jackknife,
    run_trials,
    sweep,
)
from .matching import (
    DecodingGraph,
    DefectGraph,
    build_decoding_graph,
    form_defect_graph,
    matching_to_correction,
    min_weight_perfect_matching,
)
from .noise import NoiseParams, Syndrome, custom_params, resolve_params, sample_error, syndrome_of
from .pauli import PauliString, multiply, symplectic_product, weight

__version__ = "0.1.0"

__all__ = [
    "PLANAR",
    "XYZ_PLANAR",
    "CodeLayout",
    "BatchStats",
    "DecodingGraph",
    "DefectGraph",
    "FitResult",
    "MwpmDecoder",
    "NoiseParams",
    "PauliString",
    "PmwpmDecoder",
    "Syndrome",
    "TrialConfig",
    "WeightTable",
    "build_code",
    "build_decoding_graph",
    "build_planar",
    "build_weight_table",
    "build_xyz_planar",
    "compute_logicals",
    "custom_params",
    "decode_mwpm",
    "decode_pmwpm",
    "fit_threshold",
    "form_defect_graph",
    "is_logical_failure",
    "jackknife",
    "matching_to_correction",
    "min_weight_perfect_matching",
    "multiply",
    "parity_probs",
    "posterior",
    "resolve_params",
    "run_trials",
    "sample_error",
    "sweep",
    "symplectic_product",
    "syndrome_of",
    "validate_layout",
    "weight",
]
