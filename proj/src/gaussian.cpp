#include "cedrf/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cedrf/errors.hpp"
#include "cedrf/rd_math.hpp"

namespace cedrf {
namespace {

void check_rate(double rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw std::domain_error("rate must be finite and >= 0");
}

void check_rates(const GaussianObservationModel& model, const std::vector<double>& rates) {
    if (rates.size() != model.encoders())
        throw std::domain_error("rate vector length must match the number of encoders");
    for (double r : rates)
        check_rate(r);
}

// Shared floor + scaled-excess form so the low-rate branch of the
// centralized scheme matches idrf() bit for bit.
double mix_with_floor(double gamma_sum, double t) {
    return 1.0 / (1.0 + gamma_sum) + (gamma_sum / (1.0 + gamma_sum)) * t;
}

} // namespace

GaussianObservationModel::GaussianObservationModel(std::vector<double> g)
    : gammas(std::move(g)) {
    if (gammas.empty())
        throw std::domain_error("observation model needs at least one channel");
    for (double gamma : gammas)
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::domain_error("every channel SNR gamma must be finite and > 0");
}

double GaussianObservationModel::gamma_sum() const {
    double s = 0.0;
    for (double gamma : gammas)
        s += gamma;
    return s;
}

double mmse_full(const GaussianObservationModel& model) {
    return 1.0 / (1.0 + model.gamma_sum());
}

double idrf(const GaussianObservationModel& model, double rate) {
    check_rate(rate);
    return mix_with_floor(model.gamma_sum(), std::exp2(-2.0 * rate));
}

double theta_centralized(const GaussianObservationModel& model, double rate) {
    check_rate(rate);
    const double gsum = model.gamma_sum();
    const double threshold = 0.5 * std::log2(1.0 + gsum);
    if (rate <= threshold)
        return std::exp2(-2.0 * rate);
    const double L = static_cast<double>(model.encoders());
    return std::exp2(-2.0 * rate / L - (L - 1.0) / L * std::log2(1.0 + gsum));
}

double cedrf_centralized(const GaussianObservationModel& model, double rate) {
    return mix_with_floor(model.gamma_sum(), theta_centralized(model, rate));
}

double cedrf_distributed(const GaussianObservationModel& model,
                         const std::vector<double>& rates) {
    check_rates(model, rates);
    double sum = 0.0;
    for (std::size_t l = 0; l < rates.size(); ++l) {
        const double x = std::exp2(-2.0 * rates[l]);
        const double gamma = model.gammas[l];
        sum += gamma * (1.0 - x) / (1.0 + gamma * x);
    }
    return 1.0 / (1.0 + sum);
}

double invert_rate_term(double gamma, double t) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("invert_rate_term: gamma must be finite and > 0");
    if (!(t >= 0.0))
        throw std::domain_error("invert_rate_term: t must be >= 0");
    if (t >= gamma)
        throw infeasibility_error(
            "invert_rate_term: summand saturates at gamma; t must be < gamma");
    return -0.5 * std::log2((gamma - t) / (gamma * (1.0 + t))) + 0.0;
}

RegionContour region_contour(const GaussianObservationModel& model,
                             double target_d, std::size_t n_points) {
    if (model.encoders() != 2)
        throw std::domain_error("region_contour: model must have exactly two encoders");
    if (n_points < 2)
        throw std::domain_error("region_contour: n_points must be >= 2");
    if (!(target_d <= 1.0))
        throw infeasibility_error("region_contour: target distortion must be <= 1");
    const double floor = mmse_full(model);
    if (!(target_d > floor))
        throw infeasibility_error(
            "region_contour: target distortion must exceed mmse(X|Y) = " +
            std::to_string(floor));

    const double g1 = model.gammas[0];
    const double g2 = model.gammas[1];
    const double total = 1.0 / target_d - 1.0; // required sum of the two summands
    double lo = total > g2 ? total - g2 : 0.0;
    double hi = total < g1 ? total : g1;
    // A saturated end (t = gamma) would need infinite rate; inset it.
    if (hi >= g1)
        hi = g1 - (g1 - lo) * 1e-9;
    if (total - lo >= g2)
        lo = lo + (hi - lo) * 1e-9;

    RegionContour contour;
    contour.target_distortion = target_d;
    contour.points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t1 = (i + 1 == n_points)
                              ? hi
                              : lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(n_points - 1);
        const double t2 = std::max(0.0, total - t1);
        contour.points.emplace_back(invert_rate_term(g1, t1), invert_rate_term(g2, t2));
    }
    return contour;
}

double cedrf_symmetric_sumrate(double gamma, double sum_rate, std::size_t L) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("gamma must be finite and > 0");
    if (L < 1)
        throw std::domain_error("L must be >= 1");
    check_rate(sum_rate);
    const double x = std::exp2(-2.0 * sum_rate / static_cast<double>(L));
    const double sum = static_cast<double>(L) * gamma * (1.0 - x) / (1.0 + gamma * x);
    return 1.0 / (1.0 + sum);
}

double cedrf_asymptotic_limit(double gamma, double sum_rate) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("gamma must be finite and > 0");
    check_rate(sum_rate);
    return 1.0 / (1.0 + 2.0 * gamma * M_LN2 * sum_rate / (1.0 + gamma));
}

DecayConstants decay_constants(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("gamma must be finite and > 0");
    return {(1.0 + gamma) / (2.0 * gamma * M_LN2), 1.0 / (2.0 * gamma)};
}

WaterfillingSolution waterfilling(const GaussianObservationModel& model, double rate) {
    check_rate(rate);
    const std::size_t L = model.encoders();
    const double lambda1 = 1.0 + model.gamma_sum();
    const double threshold = 0.5 * std::log2(lambda1);

    WaterfillingSolution out;
    out.eigenvalues.assign(L, 1.0);
    out.eigenvalues[0] = lambda1;
    if (rate <= threshold) {
        // Only the signal component lies above the water level.
        out.theta_unnormalized = lambda1 * std::exp2(-2.0 * rate);
    } else {
        out.theta_unnormalized =
            std::exp2((std::log2(lambda1) - 2.0 * rate) / static_cast<double>(L));
    }
    out.component_rates.resize(L);
    for (std::size_t l = 0; l < L; ++l)
        out.component_rates[l] =
            0.5 * log2_plus(out.eigenvalues[l] / out.theta_unnormalized);
    return out;
}

} // namespace cedrf
