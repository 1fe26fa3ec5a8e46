#pragma once

// Distortion evaluators for a Bernoulli(pi) source observed through L
// independent binary symmetric channels (Y_l = X xor Z_l, crossover
// alpha_l) and reconstructed under Hamming distortion.
//
// Notation used throughout: pi is the source bias Pr[X = 1], alpha_l the
// channel crossover, q_l = pi * alpha_l the observation bias, D_l the
// per-encoder distortion-rate value and xi_l = alpha_l * D_l the
// effective end-to-end crossover seen by the decoder ("*" is the binary
// convolution from rd_math.hpp).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cedrf {

struct BinaryObservationModel {
    double source_bias;         // pi in (0, 1/2]
    std::vector<double> alphas; // each in [0, 1/2)

    BinaryObservationModel(double pi, std::vector<double> a);

    std::size_t encoders() const { return alphas.size(); }
    double observation_bias(std::size_t l) const; // q_l = pi * alpha_l
};

// Weighted-sign form of the decoder's hypothesis test: sign variables
// S_l = +1 with probability xi_l carry weights log(bar(xi_l)/xi_l) and
// are compared against the prior threshold log(bar(pi)/pi). Weights are
// natural logs; only ratios matter. xi = 0 yields an infinite weight.
struct SignWeightSpec {
    std::vector<double> xis;
    std::vector<double> weights;
    double threshold = 0.0;
};

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
};

/// Distortion-rate value of encoder l's own compression problem:
/// h^-1(max(0, h(q_l) - rate)), in [0, q_l].
double local_drf(const BinaryObservationModel& model, std::size_t l, double rate);

/// Sign-weight data for an allocation (used by the enumerator and the
/// Monte Carlo fallback).
SignWeightSpec make_sign_weight_spec(const BinaryObservationModel& model,
                                     const std::vector<double>& rates);

/// End-to-end distortion of the compress-and-estimate scheme, evaluated
/// by exact enumeration of all 2^L sign vectors:
///   bar(pi) P[sum S_l w_l >= T] + pi P[-sum S_l w_l < T].
/// The >=/< asymmetry is deliberate and preserved. Throws size_error for
/// L > 24 (use cedrf_symmetric or cedrf_montecarlo_signs instead).
double cedrf_exact(const BinaryObservationModel& model,
                   const std::vector<double>& rates);

/// Uniform source (pi = 1/2), equal crossovers and equal rates
/// sum_rate / L: binomial-tail evaluation
///   P[Bin(L, xi) > L/2] + (1/2) P[Bin(L, xi) = L/2],
/// usable for very large L.
double cedrf_symmetric(double alpha, double sum_rate, std::size_t L);

/// Single-observer rate as a function of the end distortion D in
/// [alpha_1, pi]: h(q_1) - h((D - alpha_1)/(1 - 2 alpha_1)), clamped at 0.
double single_observer_rd(const BinaryObservationModel& model, double distortion);

/// Indirect rate-distortion function of a uniform binary source observed
/// through a BSC(alpha): R(D) = 1 - h((D - alpha)/(1 - 2 alpha)).
double idrf_binary_symmetric(double alpha, double distortion);

/// Large-L limit of cedrf_symmetric at fixed sum rate:
/// Q(2 sqrt(ln4 R_sum) (1/2 - alpha)).
double cedrf_asymptotic(double alpha, double sum_rate);

/// Chernoff upper bound on the limit: (1/2) 2^(-4 (1/2 - alpha)^2 R_sum).
double cedrf_asymptotic_bound(double alpha, double sum_rate);

/// Unbiased sampling estimate of the enumerated probability expression,
/// for allocations too wide for the exact path. Deterministic for a
/// fixed seed regardless of evaluation order (counter-based streams).
MonteCarloEstimate cedrf_montecarlo_signs(const SignWeightSpec& spec, double pi,
                                          std::size_t n_samples, std::uint64_t seed);

} // namespace cedrf
