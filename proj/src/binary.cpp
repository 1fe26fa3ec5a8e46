#include "cedrf/binary.hpp"

#include <cmath>
#include <stdexcept>

#include "cedrf/errors.hpp"
#include "cedrf/rd_math.hpp"
#include "cedrf/rng.hpp"

namespace cedrf {
namespace {

constexpr std::size_t kMaxExactEncoders = 24;
constexpr std::uint32_t kSignSamplingDomain = 0x5349u; // "SI"

void check_rate(double rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw std::domain_error("rate must be finite and >= 0");
}

// Outcome of comparing a partially infinite weighted sign sum against a
// finite threshold. A nonzero infinite part decides on its own.
inline bool sum_ge(double finite, int inf_sign, double threshold) {
    if (inf_sign != 0)
        return inf_sign > 0;
    return finite >= threshold;
}

inline bool neg_sum_lt(double finite, int inf_sign, double threshold) {
    if (inf_sign != 0)
        return inf_sign > 0; // -sum is -inf, which is < threshold
    return -finite < threshold;
}

struct KahanSum {
    double value = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = value + y;
        carry = (t - value) - y;
        value = t;
    }
};

} // namespace

BinaryObservationModel::BinaryObservationModel(double pi, std::vector<double> a)
    : source_bias(pi), alphas(std::move(a)) {
    if (!(pi > 0.0 && pi <= 0.5))
        throw std::domain_error("source bias pi must lie in (0, 1/2]");
    if (alphas.empty())
        throw std::domain_error("observation model needs at least one channel");
    for (double alpha : alphas)
        if (!(alpha >= 0.0 && alpha < 0.5))
            throw std::domain_error("every crossover alpha must lie in [0, 1/2)");
}

double BinaryObservationModel::observation_bias(std::size_t l) const {
    return star(source_bias, alphas.at(l));
}

double local_drf(const BinaryObservationModel& model, std::size_t l, double rate) {
    if (l >= model.encoders())
        throw std::domain_error("encoder index out of range");
    check_rate(rate);
    const double q = model.observation_bias(l);
    return inv_binary_entropy(std::max(0.0, binary_entropy(q) - rate));
}

SignWeightSpec make_sign_weight_spec(const BinaryObservationModel& model,
                                     const std::vector<double>& rates) {
    if (rates.size() != model.encoders())
        throw std::domain_error("rate vector length must match the number of encoders");
    SignWeightSpec spec;
    spec.threshold = std::log((1.0 - model.source_bias) / model.source_bias);
    spec.xis.reserve(rates.size());
    spec.weights.reserve(rates.size());
    for (std::size_t l = 0; l < rates.size(); ++l) {
        const double xi = star(model.alphas[l], local_drf(model, l, rates[l]));
        spec.xis.push_back(xi);
        spec.weights.push_back(std::log((1.0 - xi) / xi)); // +inf at xi == 0
    }
    return spec;
}

double cedrf_exact(const BinaryObservationModel& model,
                   const std::vector<double>& rates) {
    if (model.encoders() > kMaxExactEncoders)
        throw size_error("cedrf_exact: exact enumeration is capped at 24 encoders");
    const SignWeightSpec spec = make_sign_weight_spec(model, rates);
    const std::size_t L = spec.xis.size();

    KahanSum p_first;  // P[sum S_l w_l >= T]
    KahanSum p_second; // P[-sum S_l w_l < T]

    // Depth-first walk over sign vectors; probability-zero branches are
    // skipped, which also keeps infinite weights away from 0 * inf.
    auto visit = [&](auto&& self, std::size_t l, double prob, double finite,
                     int inf_sign) -> void {
        if (l == L) {
            if (sum_ge(finite, inf_sign, spec.threshold))
                p_first.add(prob);
            if (neg_sum_lt(finite, inf_sign, spec.threshold))
                p_second.add(prob);
            return;
        }
        const double xi = spec.xis[l];
        const double w = spec.weights[l];
        const bool infinite = std::isinf(w);
        if (xi > 0.0)
            self(self, l + 1, prob * xi, infinite ? finite : finite + w,
                 infinite ? inf_sign + 1 : inf_sign);
        if (xi < 1.0)
            self(self, l + 1, prob * (1.0 - xi), infinite ? finite : finite - w,
                 infinite ? inf_sign - 1 : inf_sign);
    };
    visit(visit, 0, 1.0, 0.0, 0);

    const double pi = model.source_bias;
    return (1.0 - pi) * p_first.value + pi * p_second.value;
}

double cedrf_symmetric(double alpha, double sum_rate, std::size_t L) {
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("crossover alpha must lie in [0, 1/2)");
    if (L < 1)
        throw std::domain_error("L must be >= 1");
    check_rate(sum_rate);

    const double local =
        inv_binary_entropy(std::max(0.0, 1.0 - sum_rate / static_cast<double>(L)));
    const double xi = star(alpha, local);
    if (xi == 0.0)
        return 0.0;

    // P[Bin(L, xi) > L/2] + (1/2) P[Bin(L, xi) = L/2], terms in log space
    // and accumulated smallest-first with compensation.
    const double log_xi = std::log(xi);
    const double log_not = std::log1p(-xi);
    const double lgamma_n = std::lgamma(static_cast<double>(L) + 1.0);
    auto log_pmf = [&](std::size_t k) {
        const double kd = static_cast<double>(k);
        const double md = static_cast<double>(L - k);
        return lgamma_n - std::lgamma(kd + 1.0) - std::lgamma(md + 1.0) +
               kd * log_xi + md * log_not;
    };

    KahanSum acc;
    for (std::size_t k = L; 2 * k > L; --k)
        acc.add(std::exp(log_pmf(k)));
    if (L % 2 == 0)
        acc.add(0.5 * std::exp(log_pmf(L / 2)));
    return acc.value;
}

double single_observer_rd(const BinaryObservationModel& model, double distortion) {
    if (model.encoders() != 1)
        throw std::domain_error("single_observer_rd: model must have one encoder");
    const double alpha = model.alphas[0];
    const double pi = model.source_bias;
    if (!(distortion >= alpha && distortion <= pi))
        throw std::domain_error(
            "single_observer_rd: distortion must lie in [alpha, source bias]");
    const double q = model.observation_bias(0);
    const double local = (distortion - alpha) / (1.0 - 2.0 * alpha);
    return std::max(0.0, binary_entropy(q) - binary_entropy(local));
}

double idrf_binary_symmetric(double alpha, double distortion) {
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("crossover alpha must lie in [0, 1/2)");
    if (!(distortion >= alpha && distortion <= 0.5))
        throw std::domain_error(
            "idrf_binary_symmetric: distortion must lie in [alpha, 1/2]");
    return 1.0 - binary_entropy((distortion - alpha) / (1.0 - 2.0 * alpha));
}

double cedrf_asymptotic(double alpha, double sum_rate) {
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("crossover alpha must lie in [0, 1/2)");
    check_rate(sum_rate);
    return q_function(2.0 * std::sqrt(std::log(4.0) * sum_rate) * (0.5 - alpha));
}

double cedrf_asymptotic_bound(double alpha, double sum_rate) {
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("crossover alpha must lie in [0, 1/2)");
    check_rate(sum_rate);
    const double gap = 0.5 - alpha;
    return 0.5 * std::exp2(-4.0 * gap * gap * sum_rate);
}

MonteCarloEstimate cedrf_montecarlo_signs(const SignWeightSpec& spec, double pi,
                                          std::size_t n_samples, std::uint64_t seed) {
    if (spec.xis.size() != spec.weights.size() || spec.xis.empty())
        throw std::domain_error("sign-weight spec must carry matching nonempty lists");
    if (!(pi > 0.0 && pi <= 0.5))
        throw std::domain_error("source bias pi must lie in (0, 1/2]");
    if (n_samples < 1)
        throw std::domain_error("n_samples must be >= 1");

    KahanSum sum;
    KahanSum sum_sq;
    for (std::size_t i = 0; i < n_samples; ++i) {
        RandomStream rng(seed, i, kSignSamplingDomain);
        double finite = 0.0;
        int inf_sign = 0;
        for (std::size_t l = 0; l < spec.xis.size(); ++l) {
            const bool plus = rng.uniform() < spec.xis[l];
            if (std::isinf(spec.weights[l]))
                inf_sign += plus ? 1 : -1;
            else
                finite += plus ? spec.weights[l] : -spec.weights[l];
        }
        double v = 0.0;
        if (sum_ge(finite, inf_sign, spec.threshold))
            v += 1.0 - pi;
        if (neg_sum_lt(finite, inf_sign, spec.threshold))
            v += pi;
        sum.add(v);
        sum_sq.add(v * v);
    }

    MonteCarloEstimate est;
    est.n_samples = n_samples;
    est.mean = sum.value / static_cast<double>(n_samples);
    if (n_samples > 1) {
        const double n = static_cast<double>(n_samples);
        const double var = std::max(0.0, (sum_sq.value - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

} // namespace cedrf
