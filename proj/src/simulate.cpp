#include "cedrf/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cedrf/errors.hpp"
#include "cedrf/rd_math.hpp"
#include "cedrf/rng.hpp"

namespace cedrf {
namespace {

constexpr std::size_t kBlockSize = 1u << 13;
constexpr std::uint32_t kGaussDistributedDomain = 0x4744u;
constexpr std::uint32_t kGaussCentralizedDomain = 0x4743u;
constexpr std::uint32_t kBinaryDomain = 0x4249u;
constexpr std::uint32_t kCodebookWordsDomain = 0x4357u;
constexpr std::uint32_t kCodebookSourceDomain = 0x4353u;

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

void check_config(const SimulationConfig& config) {
    if (config.n_samples < 1)
        throw std::domain_error("simulation needs n_samples >= 1");
    if (config.parallel_chunks < 1)
        throw std::domain_error("parallel_chunks must be >= 1");
}

struct BlockTotals {
    double sum_d = 0.0;
    double sum_d2 = 0.0;
    std::vector<double> sum_loc;
    std::vector<double> sum_loc2;
    std::vector<std::uint64_t> counts;
};

// Runs per_sample over a fixed block grid. Blocks are assigned to workers
// round-robin but reduced in block order, so the chunk count can only
// change the wall time, never the result. The kernel is copied per worker
// so it may carry mutable scratch space.
template <typename PerSample>
SimulationResult run_blocks(const SimulationConfig& config, std::size_t n_locals,
                            std::size_t n_counts, PerSample kernel) {
    check_config(config);
    const std::size_t n = config.n_samples;
    const std::size_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<BlockTotals> blocks(n_blocks);

    auto worker = [&](std::size_t first_block, std::size_t stride, PerSample fn) {
        std::vector<double> locals(n_locals);
        for (std::size_t b = first_block; b < n_blocks; b += stride) {
            BlockTotals& acc = blocks[b];
            acc.sum_loc.assign(n_locals, 0.0);
            acc.sum_loc2.assign(n_locals, 0.0);
            acc.counts.assign(n_counts, 0);
            const std::size_t begin = b * kBlockSize;
            const std::size_t end = std::min(begin + kBlockSize, n);
            for (std::size_t i = begin; i < end; ++i) {
                const double d = fn(i, locals.data(), acc.counts.data());
                acc.sum_d += d;
                acc.sum_d2 += d * d;
                for (std::size_t l = 0; l < n_locals; ++l) {
                    acc.sum_loc[l] += locals[l];
                    acc.sum_loc2[l] += locals[l] * locals[l];
                }
            }
        }
    };

    const std::size_t workers = std::min(config.parallel_chunks, n_blocks);
    if (workers <= 1) {
        worker(0, 1, kernel);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(worker, t, workers, kernel);
        for (auto& th : pool)
            th.join();
    }

    KahanSum d, d2;
    std::vector<KahanSum> loc(n_locals), loc2(n_locals);
    std::vector<std::uint64_t> counts(n_counts, 0);
    for (const BlockTotals& acc : blocks) {
        d.add(acc.sum_d);
        d2.add(acc.sum_d2);
        for (std::size_t l = 0; l < n_locals; ++l) {
            loc[l].add(acc.sum_loc[l]);
            loc2[l].add(acc.sum_loc2[l]);
        }
        for (std::size_t c = 0; c < n_counts; ++c)
            counts[c] += acc.counts[c];
    }

    const double nd = static_cast<double>(n);
    auto std_error = [nd](double sum, double sum_sq, double mean) {
        if (nd < 2.0)
            return 0.0;
        (void)sum;
        const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));
        return std::sqrt(var / nd);
    };

    SimulationResult out;
    out.n_samples = n;
    out.mean_distortion = d.value / nd;
    out.std_error = std_error(d.value, d2.value, out.mean_distortion);
    out.local_distortions.resize(n_locals);
    out.local_std_errors.resize(n_locals);
    for (std::size_t l = 0; l < n_locals; ++l) {
        out.local_distortions[l] = loc[l].value / nd;
        out.local_std_errors[l] =
            std_error(loc[l].value, loc2[l].value, out.local_distortions[l]);
    }
    out.joint_counts = std::move(counts);
    return out;
}

void check_gaussian_rates(const GaussianObservationModel& model,
                          const std::vector<double>& rates) {
    if (rates.size() != model.encoders())
        throw std::domain_error("rate vector length must match the number of encoders");
    for (double r : rates)
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::domain_error("rate must be finite and >= 0");
}

} // namespace

SimulationResult simulate_gaussian_distributed(const GaussianObservationModel& model,
                                               const std::vector<double>& rates,
                                               const SimulationConfig& config) {
    check_gaussian_rates(model, rates);
    const std::size_t L = model.encoders();

    struct Channel {
        double sqrt_gamma;
        double keep;     // 1 - 2^(-2R)
        double noise_sd; // sqrt((1 + gamma) x (1 - x))
        double est_coef; // linear MMSE weight on the reproduction
    };
    std::vector<Channel> ch(L);
    double info = 0.0; // sum a_l^2 / v_l, the Fisher-style total
    for (std::size_t l = 0; l < L; ++l) {
        const double gamma = model.gammas[l];
        const double x = std::exp2(-2.0 * rates[l]);
        ch[l].sqrt_gamma = std::sqrt(gamma);
        ch[l].keep = 1.0 - x;
        ch[l].noise_sd = std::sqrt((1.0 + gamma) * x * (1.0 - x));
        if (x < 1.0) {
            const double a = ch[l].sqrt_gamma * (1.0 - x);
            const double v = (1.0 - x) * (1.0 + gamma * x);
            ch[l].est_coef = a / v;
            info += a * a / v;
        } else {
            ch[l].est_coef = 0.0; // zero-rate encoder reproduces the constant 0
        }
    }
    const double denom = 1.0 + info;

    auto kernel = [&model, ch, denom, L, seed = config.seed](
                      std::size_t i, double* locals, std::uint64_t*) mutable {
        RandomStream rng(seed, i, kGaussDistributedDomain);
        const double x = rng.normal();
        double y[64];
        for (std::size_t l = 0; l < L; ++l)
            y[l] = ch[l].sqrt_gamma * x + rng.normal();
        double score = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            const double yhat = ch[l].keep * y[l] + ch[l].noise_sd * rng.normal();
            const double e = y[l] - yhat;
            locals[l] = e * e;
            score += ch[l].est_coef * yhat;
        }
        const double xhat = score / denom;
        return (x - xhat) * (x - xhat);
    };
    if (L > 64)
        throw size_error("simulate_gaussian_distributed: at most 64 encoders");
    return run_blocks(config, L, 0, kernel);
}

SimulationResult simulate_gaussian_centralized(const GaussianObservationModel& model,
                                               double rate,
                                               const SimulationConfig& config) {
    const std::size_t L = model.encoders();
    if (L > 64)
        throw size_error("simulate_gaussian_centralized: at most 64 encoders");
    const WaterfillingSolution wf = waterfilling(model, rate);

    // Orthonormal basis with first vector a/|a|, completed by the
    // reflection that swaps e1 and a/|a| (identity when they coincide).
    std::vector<double> a(L);
    double norm2 = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        a[l] = std::sqrt(model.gammas[l]);
        norm2 += a[l] * a[l];
    }
    const double norm = std::sqrt(norm2);
    std::vector<double> refl(L, 0.0);
    bool use_reflection = false;
    {
        std::vector<double> diff(L);
        double d2 = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            diff[l] = a[l] / norm - (l == 0 ? 1.0 : 0.0);
            d2 += diff[l] * diff[l];
        }
        if (d2 > 1e-30) {
            use_reflection = true;
            const double dn = std::sqrt(d2);
            for (std::size_t l = 0; l < L; ++l)
                refl[l] = diff[l] / dn;
        }
    }
    auto column_dot = [&](const std::vector<double>& v, std::size_t col,
                          double refl_dot_v) {
        // u_col^T v where u_col is column `col` of I - 2 r r^T
        return v[col] - (use_reflection ? 2.0 * refl[col] * refl_dot_v : 0.0);
    };

    struct Component {
        double keep;     // 1 - 2^(-2R_l)
        double noise_sd; // sqrt(D_l (1 - 2^(-2R_l)))
        double est_coef;
    };
    std::vector<Component> comp(L);
    double refl_dot_a = 0.0;
    for (std::size_t l = 0; l < L; ++l)
        refl_dot_a += refl[l] * a[l];
    double info = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        const double x = std::exp2(-2.0 * wf.component_rates[l]);
        const double dist = std::min(wf.theta_unnormalized, wf.eigenvalues[l]);
        comp[l].keep = 1.0 - x;
        comp[l].noise_sd = std::sqrt(dist * (1.0 - x));
        if (x < 1.0) {
            const double b = (1.0 - x) * column_dot(a, l, refl_dot_a);
            const double v = (1.0 - x) * (1.0 - x) + dist * (1.0 - x);
            comp[l].est_coef = b / v;
            info += b * b / v;
        } else {
            comp[l].est_coef = 0.0;
        }
    }
    const double denom = 1.0 + info;

    auto kernel = [a, refl, use_reflection, comp, denom, L, seed = config.seed](
                      std::size_t i, double* locals, std::uint64_t*) mutable {
        RandomStream rng(seed, i, kGaussCentralizedDomain);
        const double x = rng.normal();
        double y[64];
        double refl_dot_y = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            y[l] = a[l] * x + rng.normal();
            refl_dot_y += refl[l] * y[l];
        }
        double score = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            const double t = y[l] - (use_reflection ? 2.0 * refl[l] * refl_dot_y : 0.0);
            const double that = comp[l].keep * t + comp[l].noise_sd * rng.normal();
            const double e = t - that;
            locals[l] = e * e;
            score += comp[l].est_coef * that;
        }
        const double xhat = score / denom;
        return (x - xhat) * (x - xhat);
    };
    return run_blocks(config, L, 0, kernel);
}

namespace {

struct BinaryChannel {
    double alpha;
    bool constant_zero; // zero-rate: the reproduction collapses to 0
    double f1;          // P(reproduction = 1 | observation = 1)
    double f0;          // P(reproduction = 1 | observation = 0)
    double weight;      // log(bar(xi)/xi), +inf when xi == 0
};

std::vector<BinaryChannel> make_binary_channels(const BinaryObservationModel& model,
                                                const std::vector<double>& rates) {
    const SignWeightSpec spec = make_sign_weight_spec(model, rates);
    std::vector<BinaryChannel> ch(model.encoders());
    for (std::size_t l = 0; l < ch.size(); ++l) {
        const double q = model.observation_bias(l);
        const double d = local_drf(model, l, rates[l]);
        ch[l].alpha = model.alphas[l];
        ch[l].weight = spec.weights[l];
        if (d >= q) {
            ch[l].constant_zero = true;
            ch[l].f0 = ch[l].f1 = 0.0;
        } else {
            ch[l].constant_zero = false;
            const double bias = (q - d) / (1.0 - 2.0 * d); // reproduction marginal
            ch[l].f1 = (1.0 - d) * bias / q;
            ch[l].f0 = d * bias / (1.0 - q);
        }
    }
    return ch;
}

} // namespace

SimulationResult simulate_binary(const BinaryObservationModel& model,
                                 const std::vector<double>& rates,
                                 const SimulationConfig& config) {
    if (rates.size() != model.encoders())
        throw std::domain_error("rate vector length must match the number of encoders");
    const std::size_t L = model.encoders();
    if (L > 64)
        throw size_error("simulate_binary: at most 64 encoders");
    const std::vector<BinaryChannel> ch = make_binary_channels(model, rates);
    const double pi = model.source_bias;
    const double threshold = std::log((1.0 - pi) / pi);

    auto kernel = [ch, pi, threshold, L, seed = config.seed](
                      std::size_t i, double* locals, std::uint64_t* counts) mutable {
        RandomStream rng(seed, i, kBinaryDomain);
        const bool x = rng.uniform() < pi;
        bool y[64];
        for (std::size_t l = 0; l < L; ++l) {
            const bool z = rng.uniform() < ch[l].alpha;
            y[l] = x != z;
        }
        double finite = 0.0;
        int inf_sign = 0;
        for (std::size_t l = 0; l < L; ++l) {
            const double p1 = y[l] ? ch[l].f1 : ch[l].f0;
            const bool yhat = !ch[l].constant_zero && rng.uniform() < p1;
            locals[l] = (yhat != y[l]) ? 1.0 : 0.0;
            counts[4 * l + 2 * (y[l] ? 1 : 0) + (yhat ? 1 : 0)] += 1;
            if (std::isinf(ch[l].weight))
                inf_sign += yhat ? 1 : -1;
            else
                finite += yhat ? ch[l].weight : -ch[l].weight;
        }
        // log-likelihood ratio sign; exact ties fall to a fair coin
        bool xhat;
        if (inf_sign != 0)
            xhat = inf_sign > 0;
        else if (finite > threshold)
            xhat = true;
        else if (finite < threshold)
            xhat = false;
        else
            xhat = rng.uniform() < 0.5;
        return (xhat != x) ? 1.0 : 0.0;
    };
    return run_blocks(config, L, 4 * L, kernel);
}

SimulationResult simulate_binary_codebook(const BinaryObservationModel& model,
                                          const CodebookExperimentConfig& config) {
    if (model.encoders() != 1)
        throw std::domain_error("codebook experiment supports a single encoder");
    if (config.blocklength < 1 || config.blocklength > 64)
        throw std::domain_error("blocklength must lie in [1, 64]");
    if (!(config.rate >= 0.0) || !std::isfinite(config.rate))
        throw std::domain_error("rate must be finite and >= 0");
    if (config.n_trials < 1)
        throw std::domain_error("n_trials must be >= 1");
    const double bits = std::floor(static_cast<double>(config.blocklength) * config.rate);
    if (bits > 26.0)
        throw size_error("codebook experiment capped at 2^26 words");

    const std::size_t n = config.blocklength;
    const std::size_t n_words = std::size_t{1} << static_cast<unsigned>(bits);
    const double alpha = model.alphas[0];
    const double pi = model.source_bias;
    const double q = model.observation_bias(0);
    const double d_target = inv_binary_entropy(std::max(0.0, binary_entropy(q) - config.rate));
    const double bias = d_target >= q ? 0.0 : (q - d_target) / (1.0 - 2.0 * d_target);
    const double xi = star(alpha, d_target);
    const double weight = std::log((1.0 - xi) / xi);
    const double threshold = std::log((1.0 - pi) / pi);

    // Symbolwise decision table for reproduction symbols 0/1; -1 marks a coin.
    int dec[2];
    for (int s = 0; s < 2; ++s) {
        const double stat = s ? weight : -weight;
        if (stat > threshold)
            dec[s] = 1;
        else if (stat < threshold)
            dec[s] = 0;
        else
            dec[s] = -1;
    }

    std::vector<std::uint64_t> codebook(n_words);
    KahanSum end_sum, end_sum2, loc_sum, loc_sum2;
    for (std::size_t trial = 0; trial < config.n_trials; ++trial) {
        RandomStream word_rng(config.seed, trial, kCodebookWordsDomain);
        for (std::size_t m = 0; m < n_words; ++m) {
            std::uint64_t w = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (word_rng.uniform() < bias)
                    w |= std::uint64_t{1} << i;
            codebook[m] = w;
        }

        RandomStream src_rng(config.seed, trial, kCodebookSourceDomain);
        std::uint64_t xw = 0, yw = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool x = src_rng.uniform() < pi;
            const bool z = src_rng.uniform() < alpha;
            if (x)
                xw |= std::uint64_t{1} << i;
            if (x != z)
                yw |= std::uint64_t{1} << i;
        }

        std::size_t best = 0;
        int best_dist = static_cast<int>(n) + 1;
        for (std::size_t m = 0; m < n_words; ++m) {
            const int dist = std::popcount(yw ^ codebook[m]);
            if (dist < best_dist) {
                best_dist = dist;
                best = m;
            }
        }
        const std::uint64_t yhat = codebook[best];

        std::uint64_t xhat = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int s = static_cast<int>((yhat >> i) & 1u);
            int b = dec[s];
            if (b < 0)
                b = src_rng.uniform() < 0.5 ? 1 : 0;
            if (b)
                xhat |= std::uint64_t{1} << i;
        }

        const double nd = static_cast<double>(n);
        const double end_d = std::popcount(xw ^ xhat) / nd;
        const double loc_d = best_dist / nd;
        end_sum.add(end_d);
        end_sum2.add(end_d * end_d);
        loc_sum.add(loc_d);
        loc_sum2.add(loc_d * loc_d);
    }

    const double t = static_cast<double>(config.n_trials);
    auto std_error = [t](double sum_sq, double mean) {
        if (t < 2.0)
            return 0.0;
        const double var = std::max(0.0, (sum_sq - t * mean * mean) / (t - 1.0));
        return std::sqrt(var / t);
    };

    SimulationResult out;
    out.n_samples = config.n_trials;
    out.mean_distortion = end_sum.value / t;
    out.std_error = std_error(end_sum2.value, out.mean_distortion);
    out.local_distortions = {loc_sum.value / t};
    out.local_std_errors = {std_error(loc_sum2.value, out.local_distortions[0])};
    return out;
}

} // namespace cedrf
