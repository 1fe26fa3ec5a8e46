#pragma once

// Closed-form distortion evaluators for a unit-variance Gaussian source
// observed through L parallel AWGN channels (Y_l = sqrt(gamma_l) X + Z_l)
// and reconstructed under squared error.
//
// "Centralized" means one encoder sees the whole observation vector;
// "distributed" means each channel output is compressed on its own.

#include <cstddef>
#include <utility>
#include <vector>

namespace cedrf {

struct GaussianObservationModel {
    std::vector<double> gammas; // per-channel SNR, all > 0

    explicit GaussianObservationModel(std::vector<double> g);

    std::size_t encoders() const { return gammas.size(); }
    double gamma_sum() const;
};

struct WaterfillingSolution {
    double theta_unnormalized = 0.0;    // water level against the eigenvalues
    std::vector<double> component_rates; // bits per eigencomponent, sums to R
    std::vector<double> eigenvalues;     // (1 + gamma_sum, 1, ..., 1)
};

struct RegionContour {
    double target_distortion = 0.0;
    std::vector<std::pair<double, double>> points; // (R1, R2), R1 ascending
};

struct DecayConstants {
    double ce = 0.0;  // compress-and-estimate coefficient of 1/R_sum
    double ceo = 0.0; // optimal distributed-coding coefficient
};

/// Infinite-rate floor mmse(X|Y) = 1 / (1 + gamma_sum).
double mmse_full(const GaussianObservationModel& model);

/// Indirect distortion-rate function of X given the observation vector,
/// compressed jointly at `rate` bits per symbol.
double idrf(const GaussianObservationModel& model, double rate);

/// Normalized water level for the centralized scheme: 2^(-2R) below the
/// rate threshold (1/2) log2(1 + gamma_sum), and
/// 2^(-2R/L - ((L-1)/L) log2(1 + gamma_sum)) above it.
double theta_centralized(const GaussianObservationModel& model, double rate);

/// Centralized compress-and-estimate distortion at `rate` bits per symbol.
double cedrf_centralized(const GaussianObservationModel& model, double rate);

/// Distributed compress-and-estimate distortion:
/// (1 + sum_l gamma_l (1 - 2^(-2R_l)) / (1 + gamma_l 2^(-2R_l)))^-1.
double cedrf_distributed(const GaussianObservationModel& model,
                         const std::vector<double>& rates);

/// Rate required so a single encoder's summand in the distributed formula
/// equals t, i.e. R with gamma (1 - 2^(-2R)) / (1 + gamma 2^(-2R)) = t.
/// Throws infeasibility_error for t >= gamma (the summand saturates).
double invert_rate_term(double gamma, double t);

/// Boundary of {(R1, R2) : distributed distortion <= target_d} for a
/// two-encoder model, sampled at n_points rate pairs sorted by R1.
RegionContour region_contour(const GaussianObservationModel& model,
                             double target_d, std::size_t n_points);

/// Distributed distortion with L equal-SNR encoders splitting sum_rate evenly.
double cedrf_symmetric_sumrate(double gamma, double sum_rate, std::size_t L);

/// Limit of cedrf_symmetric_sumrate as L -> infinity at fixed sum rate:
/// (1 + 2 gamma ln2 R_sum / (1 + gamma))^-1.
double cedrf_asymptotic_limit(double gamma, double sum_rate);

/// Large-sum-rate decay coefficients: distortion ~ c / R_sum with
/// c = (1+g)/(2 g ln2) for compress-and-estimate and 1/(2g) for the
/// optimal distributed code.
DecayConstants decay_constants(double gamma);

/// Reverse waterfilling over the observation covariance eigenvalues for
/// the centralized scheme. component_rates recompute to `rate` and
/// theta_unnormalized / (1 + gamma_sum) equals theta_centralized.
WaterfillingSolution waterfilling(const GaussianObservationModel& model, double rate);

} // namespace cedrf
