"""Compress-and-estimate rate-distortion toolkit.

Thin python layer over the C++ core: closed-form distortion evaluators for
the quadratic-Gaussian and binary/Hamming settings, rate-region contours,
asymptotics, and seeded Monte Carlo validation of every closed form.
"""

from ._cedrf import (
    BinaryObservationModel,
    CodebookExperimentConfig,
    GaussianObservationModel,
    RegionContour,
    SignWeightSpec,
    SimulationConfig,
    SimulationResult,
    WaterfillingSolution,
    binary_entropy,
    cedrf_asymptotic,
    cedrf_asymptotic_bound,
    cedrf_asymptotic_limit,
    cedrf_centralized,
    cedrf_distributed,
    cedrf_exact,
    cedrf_montecarlo_signs,
    cedrf_symmetric,
    cedrf_symmetric_sumrate,
    decay_constants,
    idrf,
    idrf_binary_symmetric,
    inv_binary_entropy,
    invert_rate_term,
    local_drf,
    log2_plus,
    make_sign_weight_spec,
    mmse_full,
    q_function,
    region_contour,
    simulate_binary,
    simulate_binary_codebook,
    simulate_gaussian_centralized,
    simulate_gaussian_distributed,
    single_observer_rd,
    star,
    theta_centralized,
    waterfilling,
)

__all__ = [
    "BinaryObservationModel",
    "CodebookExperimentConfig",
    "GaussianObservationModel",
    "RegionContour",
    "SignWeightSpec",
    "SimulationConfig",
    "SimulationResult",
    "WaterfillingSolution",
    "binary_entropy",
    "cedrf_asymptotic",
    "cedrf_asymptotic_bound",
    "cedrf_asymptotic_limit",
    "cedrf_centralized",
    "cedrf_distributed",
    "cedrf_exact",
    "cedrf_montecarlo_signs",
    "cedrf_symmetric",
    "cedrf_symmetric_sumrate",
    "decay_constants",
    "idrf",
    "idrf_binary_symmetric",
    "inv_binary_entropy",
    "invert_rate_term",
    "local_drf",
    "log2_plus",
    "make_sign_weight_spec",
    "mmse_full",
    "q_function",
    "region_contour",
    "simulate_binary",
    "simulate_binary_codebook",
    "simulate_gaussian_centralized",
    "simulate_gaussian_distributed",
    "single_observer_rd",
    "star",
    "theta_centralized",
    "waterfilling",
]
