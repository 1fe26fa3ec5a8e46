// cedrf: command-line front end for the compress-and-estimate toolkit.
// Computes distortion-rate curves, rate-region contours, asymptotics and
// seeded Monte Carlo validations; emits CSV, JSON or SVG.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cedrf/binary.hpp"
#include "cedrf/errors.hpp"
#include "cedrf/gaussian.hpp"
#include "cedrf/rd_math.hpp"
#include "cedrf/simulate.hpp"
#include "cedrf/table.hpp"

using json = nlohmann::ordered_json;

namespace {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Sweep {
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;
};

Sweep parse_sweep(const std::vector<std::string>& tokens) {
    if (tokens.size() != 4)
        throw std::domain_error("--sweep expects: VARIABLE START STOP STEPS");
    Sweep s;
    s.variable = tokens[0];
    try {
        s.start = std::stod(tokens[1]);
        s.stop = std::stod(tokens[2]);
        const long long n = std::stoll(tokens[3]);
        if (n < 1)
            throw std::domain_error("");
        s.steps = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw std::domain_error("--sweep expects numeric START STOP and STEPS >= 1");
    }
    if (!(s.stop >= s.start))
        throw std::domain_error("--sweep requires STOP >= START");
    return s;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i)
        v[i] = (i + 1 == n) ? b
                            : a + (b - a) * static_cast<double>(i) /
                                  static_cast<double>(n - 1);
    return v;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        if (std::fwrite(content.data(), 1, content.size(), stdout) != content.size())
            throw io_error("failed to write to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open output file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw io_error("failed while writing: " + path);
}

json table_to_json(const cedrf::CurveTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r;
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            r[table.columns[c]] = row[c];
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit_table(const cedrf::CurveTable& table, const std::string& format,
                const std::string& output, const std::string& command,
                const json& parameters) {
    if (format == "csv") {
        write_output(output, cedrf::to_csv(table));
    } else if (format == "svg") {
        cedrf::SvgOptions opt;
        opt.title = command;
        write_output(output, cedrf::emit_svg(table, opt));
    } else if (format == "json") {
        json doc;
        doc["command"] = command;
        doc["parameters"] = parameters;
        doc["results"] = table_to_json(table);
        write_output(output, doc.dump(2) + "\n");
    } else {
        throw std::domain_error("format must be one of csv, json, svg");
    }
}

json result_to_json(const cedrf::SimulationResult& r) {
    json out;
    out["mean_distortion"] = r.mean_distortion;
    out["std_error"] = r.std_error;
    out["n_samples"] = r.n_samples;
    out["local_distortions"] = r.local_distortions;
    out["local_std_errors"] = r.local_std_errors;
    return out;
}

// Values from a --config JSON file fill in options that were not given on
// the command line; explicit flags always win.
class ConfigOverlay {
public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw io_error("cannot open config file: " + path);
        try {
            in >> data_;
        } catch (const std::exception& e) {
            throw std::domain_error(std::string("config file is not valid JSON: ") +
                                    e.what());
        }
    }

    template <typename T>
    void fill(const CLI::Option* opt, const char* key, T& var) const {
        if (opt != nullptr && opt->count() > 0)
            return;
        if (!data_.contains(key))
            return;
        try {
            var = data_.at(key).get<T>();
        } catch (const std::exception&) {
            throw std::domain_error(std::string("config value for '") + key +
                                    "' has the wrong type");
        }
    }

    bool has(const char* key) const { return data_.contains(key); }

private:
    json data_;
};

struct CommandContext {
    std::string output = "-";
    std::string format;
    std::string config_path;
    CLI::Option* format_opt = nullptr;
    ConfigOverlay config;

    void prepare(const std::string& default_format) {
        if (!config_path.empty())
            config.load(config_path);
        config.fill(format_opt, "format", format);
        if (format.empty())
            format = default_format;
    }
};

void add_common(CLI::App* cmd, CommandContext& ctx) {
    cmd->add_option("-o,--output", ctx.output, "Output path ('-' for stdout)");
    ctx.format_opt = cmd->add_option("--format", ctx.format, "csv, json or svg");
    cmd->add_option("--config", ctx.config_path,
                    "JSON file with default parameter values");
}

int run(int argc, char** argv) {
    CLI::App app{"compress-and-estimate rate-distortion toolkit"};
    app.require_subcommand(1);

    // ---- gauss-centralized ------------------------------------------------
    auto ctx_gc = std::make_shared<CommandContext>();
    auto* gc = app.add_subcommand(
        "gauss-centralized",
        "Centralized Gaussian distortion-rate curve next to the indirect one");
    std::vector<double> gc_gammas;
    std::vector<std::string> gc_sweep{"R", "0", "4", "200"};
    auto* gc_gammas_opt =
        gc->add_option("--gammas", gc_gammas, "Per-channel SNRs")->delimiter(',');
    auto* gc_sweep_opt =
        gc->add_option("--sweep", gc_sweep, "R START STOP STEPS")->expected(4);
    add_common(gc, *ctx_gc);
    gc->callback([&, ctx_gc]() {
        ctx_gc->prepare("csv");
        ctx_gc->config.fill(gc_gammas_opt, "gammas", gc_gammas);
        ctx_gc->config.fill(gc_sweep_opt, "sweep", gc_sweep);
        const Sweep sweep = parse_sweep(gc_sweep);
        if (sweep.variable != "R")
            throw std::domain_error("gauss-centralized sweeps over R only");
        cedrf::GaussianObservationModel model(gc_gammas);
        cedrf::CurveTable table;
        table.columns = {"R", "D_ce", "D_idrf"};
        for (double r : linspace(sweep.start, sweep.stop, sweep.steps))
            table.rows.push_back(
                {r, cedrf::cedrf_centralized(model, r), cedrf::idrf(model, r)});
        json params;
        params["gammas"] = gc_gammas;
        params["sweep"] = {sweep.variable, sweep.start, sweep.stop, sweep.steps};
        emit_table(table, ctx_gc->format, ctx_gc->output, "gauss-centralized", params);
    });

    // ---- gauss-distributed ------------------------------------------------
    auto ctx_gd = std::make_shared<CommandContext>();
    auto* gd = app.add_subcommand(
        "gauss-distributed",
        "Distributed Gaussian distortion, one rate point or an equal-split sweep");
    std::vector<double> gd_gammas, gd_rates;
    std::vector<std::string> gd_sweep;
    auto* gd_gammas_opt =
        gd->add_option("--gammas", gd_gammas, "Per-channel SNRs")->delimiter(',');
    auto* gd_rates_opt =
        gd->add_option("--rates", gd_rates, "Per-encoder rates")->delimiter(',');
    auto* gd_sweep_opt =
        gd->add_option("--sweep", gd_sweep, "Rsum START STOP STEPS (equal split)")
            ->expected(4);
    add_common(gd, *ctx_gd);
    gd->callback([&, ctx_gd]() {
        ctx_gd->prepare("csv");
        ctx_gd->config.fill(gd_gammas_opt, "gammas", gd_gammas);
        ctx_gd->config.fill(gd_rates_opt, "rates", gd_rates);
        if (gd_sweep_opt->count() == 0 && ctx_gd->config.has("sweep"))
            ctx_gd->config.fill(gd_sweep_opt, "sweep", gd_sweep);
        cedrf::GaussianObservationModel model(gd_gammas);
        json params;
        params["gammas"] = gd_gammas;
        cedrf::CurveTable table;
        if (!gd_sweep.empty()) {
            const Sweep sweep = parse_sweep(gd_sweep);
            if (sweep.variable != "Rsum")
                throw std::domain_error("gauss-distributed sweeps over Rsum only");
            table.columns = {"R_sum", "D_ce"};
            for (double rsum : linspace(sweep.start, sweep.stop, sweep.steps)) {
                std::vector<double> rates(model.encoders(),
                                          rsum / static_cast<double>(model.encoders()));
                table.rows.push_back({rsum, cedrf::cedrf_distributed(model, rates)});
            }
            params["sweep"] = {sweep.variable, sweep.start, sweep.stop, sweep.steps};
        } else {
            if (gd_rates.empty())
                throw std::domain_error("gauss-distributed needs --rates or --sweep");
            table.columns.clear();
            std::vector<double> row = gd_rates;
            for (std::size_t l = 1; l <= gd_rates.size(); ++l)
                table.columns.push_back("R_" + std::to_string(l));
            table.columns.push_back("D_ce");
            row.push_back(cedrf::cedrf_distributed(model, gd_rates));
            table.rows.push_back(std::move(row));
            params["rates"] = gd_rates;
        }
        emit_table(table, ctx_gd->format, ctx_gd->output, "gauss-distributed", params);
    });

    // ---- gauss-region -----------------------------------------------------
    auto ctx_gr = std::make_shared<CommandContext>();
    auto* gr = app.add_subcommand(
        "gauss-region", "Two-encoder rate-region contour for a target distortion");
    std::vector<double> gr_gammas;
    double gr_target = 0.0;
    std::size_t gr_points = 101;
    auto* gr_gammas_opt =
        gr->add_option("--gammas", gr_gammas, "Two channel SNRs")->delimiter(',');
    auto* gr_target_opt =
        gr->add_option("--target", gr_target, "Target distortion in (mmse, 1]");
    auto* gr_points_opt = gr->add_option("--points", gr_points, "Contour samples");
    add_common(gr, *ctx_gr);
    gr->callback([&, ctx_gr]() {
        ctx_gr->prepare("csv");
        ctx_gr->config.fill(gr_gammas_opt, "gammas", gr_gammas);
        ctx_gr->config.fill(gr_target_opt, "target", gr_target);
        ctx_gr->config.fill(gr_points_opt, "points", gr_points);
        cedrf::GaussianObservationModel model(gr_gammas);
        const cedrf::RegionContour contour =
            cedrf::region_contour(model, gr_target, gr_points);
        cedrf::CurveTable table;
        table.columns = {"R1", "R2"};
        for (const auto& [r1, r2] : contour.points)
            table.rows.push_back({r1, r2});
        json params;
        params["gammas"] = gr_gammas;
        params["target"] = gr_target;
        params["points"] = gr_points;
        emit_table(table, ctx_gr->format, ctx_gr->output, "gauss-region", params);
    });

    // ---- gauss-asymptotic ---------------------------------------------------
    auto ctx_ga = std::make_shared<CommandContext>();
    auto* ga = app.add_subcommand(
        "gauss-asymptotic",
        "Large-L symmetric-SNR limit of the distributed Gaussian distortion");
    double ga_gamma = 0.0;
    std::size_t ga_L = 0;
    std::vector<std::string> ga_sweep{"Rsum", "0", "8", "100"};
    auto* ga_gamma_opt = ga->add_option("--gamma", ga_gamma, "Per-channel SNR");
    auto* ga_L_opt =
        ga->add_option("--L", ga_L, "Also tabulate the finite-L symmetric value");
    auto* ga_sweep_opt =
        ga->add_option("--sweep", ga_sweep, "Rsum START STOP STEPS")->expected(4);
    add_common(ga, *ctx_ga);
    ga->callback([&, ctx_ga]() {
        ctx_ga->prepare("csv");
        ctx_ga->config.fill(ga_gamma_opt, "gamma", ga_gamma);
        ctx_ga->config.fill(ga_L_opt, "L", ga_L);
        ctx_ga->config.fill(ga_sweep_opt, "sweep", ga_sweep);
        const Sweep sweep = parse_sweep(ga_sweep);
        if (sweep.variable != "Rsum")
            throw std::domain_error("gauss-asymptotic sweeps over Rsum only");
        cedrf::CurveTable table;
        table.columns = {"R_sum", "D_limit"};
        if (ga_L > 0)
            table.columns.push_back("D_ce_L");
        for (double rsum : linspace(sweep.start, sweep.stop, sweep.steps)) {
            std::vector<double> row{rsum, cedrf::cedrf_asymptotic_limit(ga_gamma, rsum)};
            if (ga_L > 0)
                row.push_back(cedrf::cedrf_symmetric_sumrate(ga_gamma, rsum, ga_L));
            table.rows.push_back(std::move(row));
        }
        json params;
        params["gamma"] = ga_gamma;
        if (ga_L > 0)
            params["L"] = ga_L;
        params["sweep"] = {sweep.variable, sweep.start, sweep.stop, sweep.steps};
        emit_table(table, ctx_ga->format, ctx_ga->output, "gauss-asymptotic", params);
    });

    // ---- binary-cedrf -------------------------------------------------------
    auto ctx_bc = std::make_shared<CommandContext>();
    auto* bc = app.add_subcommand(
        "binary-cedrf", "Exact distributed binary distortion for one rate vector");
    double bc_pi = 0.0;
    std::vector<double> bc_alphas, bc_rates;
    auto* bc_pi_opt = bc->add_option("--pi", bc_pi, "Source bias in (0, 1/2]");
    auto* bc_alphas_opt =
        bc->add_option("--alphas", bc_alphas, "Per-channel crossovers")->delimiter(',');
    auto* bc_rates_opt =
        bc->add_option("--rates", bc_rates, "Per-encoder rates")->delimiter(',');
    add_common(bc, *ctx_bc);
    bc->callback([&, ctx_bc]() {
        ctx_bc->prepare("json");
        ctx_bc->config.fill(bc_pi_opt, "pi", bc_pi);
        ctx_bc->config.fill(bc_alphas_opt, "alphas", bc_alphas);
        ctx_bc->config.fill(bc_rates_opt, "rates", bc_rates);
        cedrf::BinaryObservationModel model(bc_pi, bc_alphas);
        const double d = cedrf::cedrf_exact(model, bc_rates);
        cedrf::CurveTable table;
        table.columns = {"D_ce"};
        table.rows.push_back({d});
        json params;
        params["pi"] = bc_pi;
        params["alphas"] = bc_alphas;
        params["rates"] = bc_rates;
        emit_table(table, ctx_bc->format, ctx_bc->output, "binary-cedrf", params);
    });

    // ---- binary-rd ----------------------------------------------------------
    auto ctx_br = std::make_shared<CommandContext>();
    auto* br = app.add_subcommand(
        "binary-rd",
        "Single-observer binary curves: compress-and-estimate, indirect, direct");
    double br_pi = 0.0, br_alpha = 0.0;
    std::size_t br_points = 200;
    auto* br_pi_opt = br->add_option("--pi", br_pi, "Source bias in (0, 1/2]");
    auto* br_alpha_opt = br->add_option("--alpha", br_alpha, "Channel crossover");
    auto* br_points_opt = br->add_option("--points", br_points, "Sweep points");
    add_common(br, *ctx_br);
    br->callback([&, ctx_br]() {
        ctx_br->prepare("csv");
        ctx_br->config.fill(br_pi_opt, "pi", br_pi);
        ctx_br->config.fill(br_alpha_opt, "alpha", br_alpha);
        ctx_br->config.fill(br_points_opt, "points", br_points);
        if (br_points < 2)
            throw std::domain_error("binary-rd needs at least 2 sweep points");
        cedrf::BinaryObservationModel model(br_pi, {br_alpha});
        const double q = model.observation_bias(0);
        const double rmax = std::max(1.0, cedrf::binary_entropy(q));
        cedrf::CurveTable table;
        table.columns = {"R", "D_ce", "D_idrf", "D_drf"};
        for (double r : linspace(0.0, rmax, br_points)) {
            const double d_ce = cedrf::cedrf_exact(model, {r});
            // indirect baseline for the uniform source, inverted to D(R)
            const double d_idrf =
                br_alpha + (1.0 - 2.0 * br_alpha) *
                               cedrf::inv_binary_entropy(std::max(0.0, 1.0 - r));
            const double d_drf = cedrf::inv_binary_entropy(
                std::max(0.0, cedrf::binary_entropy(br_pi) - r));
            table.rows.push_back({r, d_ce, d_idrf, d_drf});
        }
        json params;
        params["pi"] = br_pi;
        params["alpha"] = br_alpha;
        params["points"] = br_points;
        emit_table(table, ctx_br->format, ctx_br->output, "binary-rd", params);
    });

    // ---- binary-asymptotic ----------------------------------------------------
    auto ctx_ba = std::make_shared<CommandContext>();
    auto* ba = app.add_subcommand(
        "binary-asymptotic",
        "Uniform-source symmetric binary distortion against the number of encoders");
    double ba_alpha = 0.0, ba_rsum = 0.0;
    std::vector<std::string> ba_sweep{"L", "1", "10000", "40"};
    auto* ba_alpha_opt = ba->add_option("--alpha", ba_alpha, "Channel crossover");
    auto* ba_rsum_opt = ba->add_option("--rsum", ba_rsum, "Total rate budget");
    auto* ba_sweep_opt =
        ba->add_option("--sweep", ba_sweep, "L START STOP STEPS (log-spaced)")
            ->expected(4);
    add_common(ba, *ctx_ba);
    ba->callback([&, ctx_ba]() {
        ctx_ba->prepare("csv");
        ctx_ba->config.fill(ba_alpha_opt, "alpha", ba_alpha);
        ctx_ba->config.fill(ba_rsum_opt, "rsum", ba_rsum);
        ctx_ba->config.fill(ba_sweep_opt, "sweep", ba_sweep);
        const Sweep sweep = parse_sweep(ba_sweep);
        if (sweep.variable != "L")
            throw std::domain_error("binary-asymptotic sweeps over L only");
        if (sweep.start < 1.0)
            throw std::domain_error("L sweep must start at 1 or above");
        std::vector<std::size_t> ls;
        const double la = std::log(sweep.start);
        const double lb = std::log(sweep.stop);
        for (std::size_t i = 0; i < sweep.steps; ++i) {
            const double f = sweep.steps == 1
                                 ? la
                                 : la + (lb - la) * static_cast<double>(i) /
                                       static_cast<double>(sweep.steps - 1);
            const auto L = static_cast<std::size_t>(std::llround(std::exp(f)));
            if (ls.empty() || ls.back() != L)
                ls.push_back(L);
        }
        const double d_limit = cedrf::cedrf_asymptotic(ba_alpha, ba_rsum);
        const double d_bound = cedrf::cedrf_asymptotic_bound(ba_alpha, ba_rsum);
        cedrf::CurveTable table;
        table.columns = {"L", "D_ce", "D_limit", "D_bound"};
        for (std::size_t L : ls)
            table.rows.push_back({static_cast<double>(L),
                                  cedrf::cedrf_symmetric(ba_alpha, ba_rsum, L), d_limit,
                                  d_bound});
        json params;
        params["alpha"] = ba_alpha;
        params["rsum"] = ba_rsum;
        params["sweep"] = {sweep.variable, sweep.start, sweep.stop, sweep.steps};
        emit_table(table, ctx_ba->format, ctx_ba->output, "binary-asymptotic", params);
    });

    // ---- simulate -----------------------------------------------------------
    auto ctx_sim = std::make_shared<CommandContext>();
    auto* sim = app.add_subcommand(
        "simulate", "Seeded Monte Carlo run of one of the test-channel schemes");
    std::string sim_family;
    std::vector<double> sim_gammas, sim_alphas, sim_rates;
    double sim_pi = 0.0, sim_rate = -1.0;
    std::size_t sim_n = 0, sim_chunks = 1;
    std::uint64_t sim_seed = 0;
    auto* sim_family_opt = sim->add_option(
        "--family", sim_family, "gauss-distributed, gauss-centralized or binary");
    auto* sim_gammas_opt =
        sim->add_option("--gammas", sim_gammas, "Gaussian SNRs")->delimiter(',');
    auto* sim_pi_opt = sim->add_option("--pi", sim_pi, "Binary source bias");
    auto* sim_alphas_opt =
        sim->add_option("--alphas", sim_alphas, "Binary crossovers")->delimiter(',');
    auto* sim_rates_opt =
        sim->add_option("--rates", sim_rates, "Per-encoder rates")->delimiter(',');
    auto* sim_rate_opt =
        sim->add_option("--rate", sim_rate, "Total rate (centralized family)");
    auto* sim_n_opt = sim->add_option("--n", sim_n, "Number of samples");
    auto* sim_seed_opt = sim->add_option("--seed", sim_seed, "RNG seed (required)");
    auto* sim_chunks_opt =
        sim->add_option("--chunks", sim_chunks, "Worker count (never changes values)");
    add_common(sim, *ctx_sim);
    sim->callback([&, ctx_sim]() {
        ctx_sim->prepare("json");
        ctx_sim->config.fill(sim_family_opt, "family", sim_family);
        ctx_sim->config.fill(sim_gammas_opt, "gammas", sim_gammas);
        ctx_sim->config.fill(sim_pi_opt, "pi", sim_pi);
        ctx_sim->config.fill(sim_alphas_opt, "alphas", sim_alphas);
        ctx_sim->config.fill(sim_rates_opt, "rates", sim_rates);
        ctx_sim->config.fill(sim_rate_opt, "rate", sim_rate);
        ctx_sim->config.fill(sim_n_opt, "n", sim_n);
        ctx_sim->config.fill(sim_chunks_opt, "chunks", sim_chunks);
        if (sim_seed_opt->count() == 0 && !ctx_sim->config.has("seed"))
            throw std::domain_error("simulate requires an explicit --seed");
        ctx_sim->config.fill(sim_seed_opt, "seed", sim_seed);
        if (ctx_sim->format != "json")
            throw std::domain_error("simulate emits json only");

        cedrf::SimulationConfig cfg;
        cfg.n_samples = sim_n;
        cfg.seed = sim_seed;
        cfg.parallel_chunks = sim_chunks;

        json params;
        params["family"] = sim_family;
        cedrf::SimulationResult result;
        if (sim_family == "gauss-distributed") {
            cedrf::GaussianObservationModel model(sim_gammas);
            result = cedrf::simulate_gaussian_distributed(model, sim_rates, cfg);
            params["gammas"] = sim_gammas;
            params["rates"] = sim_rates;
        } else if (sim_family == "gauss-centralized") {
            cedrf::GaussianObservationModel model(sim_gammas);
            if (sim_rate < 0.0)
                throw std::domain_error("gauss-centralized simulation needs --rate");
            result = cedrf::simulate_gaussian_centralized(model, sim_rate, cfg);
            params["gammas"] = sim_gammas;
            params["rate"] = sim_rate;
        } else if (sim_family == "binary") {
            cedrf::BinaryObservationModel model(sim_pi, sim_alphas);
            result = cedrf::simulate_binary(model, sim_rates, cfg);
            params["pi"] = sim_pi;
            params["alphas"] = sim_alphas;
            params["rates"] = sim_rates;
        } else {
            throw std::domain_error(
                "family must be gauss-distributed, gauss-centralized or binary");
        }
        params["n"] = sim_n;
        params["chunks"] = sim_chunks;

        json doc;
        doc["command"] = "simulate";
        doc["parameters"] = params;
        doc["results"] = json::array({result_to_json(result)});
        doc["seed"] = sim_seed;
        write_output(ctx_sim->output, doc.dump(2) + "\n");
    });

    // ---- codebook -------------------------------------------------------------
    auto ctx_cb = std::make_shared<CommandContext>();
    auto* cb = app.add_subcommand(
        "codebook", "Finite-blocklength random-codebook experiment (single encoder)");
    double cb_pi = 0.0, cb_alpha = 0.0, cb_rate = 0.0;
    std::size_t cb_n = 0, cb_trials = 0;
    std::uint64_t cb_seed = 0;
    auto* cb_pi_opt = cb->add_option("--pi", cb_pi, "Source bias");
    auto* cb_alpha_opt = cb->add_option("--alpha", cb_alpha, "Channel crossover");
    auto* cb_rate_opt = cb->add_option("--rate", cb_rate, "Bits per symbol");
    auto* cb_n_opt = cb->add_option("--blocklength", cb_n, "Block length n (<= 64)");
    auto* cb_trials_opt = cb->add_option("--trials", cb_trials, "Fresh-codebook trials");
    auto* cb_seed_opt = cb->add_option("--seed", cb_seed, "RNG seed (required)");
    add_common(cb, *ctx_cb);
    cb->callback([&, ctx_cb]() {
        ctx_cb->prepare("json");
        ctx_cb->config.fill(cb_pi_opt, "pi", cb_pi);
        ctx_cb->config.fill(cb_alpha_opt, "alpha", cb_alpha);
        ctx_cb->config.fill(cb_rate_opt, "rate", cb_rate);
        ctx_cb->config.fill(cb_n_opt, "blocklength", cb_n);
        ctx_cb->config.fill(cb_trials_opt, "trials", cb_trials);
        if (cb_seed_opt->count() == 0 && !ctx_cb->config.has("seed"))
            throw std::domain_error("codebook requires an explicit --seed");
        ctx_cb->config.fill(cb_seed_opt, "seed", cb_seed);
        if (ctx_cb->format != "json")
            throw std::domain_error("codebook emits json only");

        cedrf::BinaryObservationModel model(cb_pi, {cb_alpha});
        cedrf::CodebookExperimentConfig cfg;
        cfg.blocklength = cb_n;
        cfg.rate = cb_rate;
        cfg.n_trials = cb_trials;
        cfg.seed = cb_seed;
        const cedrf::SimulationResult result = cedrf::simulate_binary_codebook(model, cfg);

        json params;
        params["pi"] = cb_pi;
        params["alpha"] = cb_alpha;
        params["rate"] = cb_rate;
        params["blocklength"] = cb_n;
        params["trials"] = cb_trials;

        json doc;
        doc["command"] = "codebook";
        doc["parameters"] = params;
        doc["results"] = json::array({result_to_json(result)});
        doc["seed"] = cb_seed;
        write_output(ctx_cb->output, doc.dump(2) + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // bad invocation is a validation error
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 4;
    }
}
