#pragma once

// Monte Carlo validation of the closed forms: the distortion-rate
// achieving test channels are simulated end to end and the resulting
// sample distortions are compared against the analytic values.
//
// Determinism contract: for a fixed (seed, n_samples) the result is
// bit-identical regardless of parallel_chunks. Samples own counter-based
// substreams and partial sums are reduced over a fixed block grid.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cedrf/binary.hpp"
#include "cedrf/gaussian.hpp"

namespace cedrf {

struct SimulationConfig {
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    std::size_t parallel_chunks = 1; // worker count only; never affects values
};

struct SimulationResult {
    double mean_distortion = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
    std::vector<double> local_distortions;  // one per encoder (or component)
    std::vector<double> local_std_errors;   // matching standard errors
    // Binary runs additionally record the per-encoder joint histogram of
    // (observation, reproduction) as counts indexed by 4l + 2y + yhat.
    std::vector<std::uint64_t> joint_counts;
};

struct CodebookExperimentConfig {
    std::size_t blocklength = 0; // n, at most 64
    double rate = 0.0;           // bits per symbol; floor(n * rate) <= 26
    std::size_t n_trials = 0;
    std::uint64_t seed = 0;
};

/// Distributed Gaussian scheme: each Y_l passes through its own scalar
/// test channel at distortion 2^(-2R_l)(1 + gamma_l); the decoder applies
/// the linear MMSE rule. Mean squared error tracks cedrf_distributed.
SimulationResult simulate_gaussian_distributed(const GaussianObservationModel& model,
                                               const std::vector<double>& rates,
                                               const SimulationConfig& config);

/// Centralized Gaussian scheme: the observation vector is rotated onto the
/// covariance eigenbasis (deterministic Householder completion of the
/// signal direction), each component passes through its waterfilling test
/// channel, and X is estimated linearly. Tracks cedrf_centralized.
/// local_distortions hold per-component MSEs (targets min(theta, lambda_l)).
SimulationResult simulate_gaussian_centralized(const GaussianObservationModel& model,
                                               double rate,
                                               const SimulationConfig& config);

/// Binary scheme: each Y_l passes through the forward test channel obtained
/// by Bayes inversion of the backward description (reproduction bias
/// (q_l - D_l)/(1 - 2 D_l)); the decoder applies the weighted-sign rule
/// with fair-coin tie breaking. Tracks cedrf_exact; per-encoder Hamming
/// distortions track local_drf.
SimulationResult simulate_binary(const BinaryObservationModel& model,
                                 const std::vector<double>& rates,
                                 const SimulationConfig& config);

/// Finite-blocklength random-codebook experiment, single encoder: fresh
/// codebooks of 2^floor(nR) words drawn from the reproduction marginal,
/// minimum-Hamming-distance encoding (ties to the lowest index), symbolwise
/// decoding. mean_distortion is the end distortion over trials;
/// local_distortions[0] the per-encoder distortion, which approaches the
/// distortion-rate value from above as n grows.
SimulationResult simulate_binary_codebook(const BinaryObservationModel& model,
                                          const CodebookExperimentConfig& config);

} // namespace cedrf
