#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cedrf/binary.hpp"
#include "cedrf/gaussian.hpp"
#include "cedrf/rd_math.hpp"
#include "cedrf/simulate.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_cedrf, m) {
    m.doc() = "Compress-and-estimate rate-distortion toolkit (C++ core)";

    // scalar helpers
    m.def("binary_entropy", &cedrf::binary_entropy, py::arg("q"));
    m.def("inv_binary_entropy", &cedrf::inv_binary_entropy, py::arg("h"));
    m.def("star", &cedrf::star, py::arg("a"), py::arg("b"));
    m.def("q_function", &cedrf::q_function, py::arg("x"));
    m.def("log2_plus", &cedrf::log2_plus, py::arg("x"));

    // Gaussian setting
    py::class_<cedrf::GaussianObservationModel>(m, "GaussianObservationModel")
        .def(py::init<std::vector<double>>(), py::arg("gammas"))
        .def_readonly("gammas", &cedrf::GaussianObservationModel::gammas)
        .def_property_readonly("encoders", &cedrf::GaussianObservationModel::encoders)
        .def_property_readonly("gamma_sum", &cedrf::GaussianObservationModel::gamma_sum);

    py::class_<cedrf::WaterfillingSolution>(m, "WaterfillingSolution")
        .def_readonly("theta_unnormalized",
                      &cedrf::WaterfillingSolution::theta_unnormalized)
        .def_readonly("component_rates", &cedrf::WaterfillingSolution::component_rates)
        .def_readonly("eigenvalues", &cedrf::WaterfillingSolution::eigenvalues);

    py::class_<cedrf::RegionContour>(m, "RegionContour")
        .def_readonly("target_distortion", &cedrf::RegionContour::target_distortion)
        .def_readonly("points", &cedrf::RegionContour::points);

    m.def("mmse_full", &cedrf::mmse_full, py::arg("model"));
    m.def("idrf", &cedrf::idrf, py::arg("model"), py::arg("rate"));
    m.def("theta_centralized", &cedrf::theta_centralized, py::arg("model"),
          py::arg("rate"));
    m.def("cedrf_centralized", &cedrf::cedrf_centralized, py::arg("model"),
          py::arg("rate"));
    m.def("cedrf_distributed", &cedrf::cedrf_distributed, py::arg("model"),
          py::arg("rates"));
    m.def("invert_rate_term", &cedrf::invert_rate_term, py::arg("gamma"), py::arg("t"));
    m.def("region_contour", &cedrf::region_contour, py::arg("model"),
          py::arg("target_d"), py::arg("n_points"));
    m.def("cedrf_symmetric_sumrate", &cedrf::cedrf_symmetric_sumrate, py::arg("gamma"),
          py::arg("sum_rate"), py::arg("L"));
    m.def("cedrf_asymptotic_limit", &cedrf::cedrf_asymptotic_limit, py::arg("gamma"),
          py::arg("sum_rate"));
    m.def(
        "decay_constants",
        [](double gamma) {
            const auto c = cedrf::decay_constants(gamma);
            return py::make_tuple(c.ce, c.ceo);
        },
        py::arg("gamma"));
    m.def("waterfilling", &cedrf::waterfilling, py::arg("model"), py::arg("rate"));

    // binary setting
    py::class_<cedrf::BinaryObservationModel>(m, "BinaryObservationModel")
        .def(py::init<double, std::vector<double>>(), py::arg("source_bias"),
             py::arg("alphas"))
        .def_readonly("source_bias", &cedrf::BinaryObservationModel::source_bias)
        .def_readonly("alphas", &cedrf::BinaryObservationModel::alphas)
        .def_property_readonly("encoders", &cedrf::BinaryObservationModel::encoders)
        .def("observation_bias", &cedrf::BinaryObservationModel::observation_bias,
             py::arg("l"));

    py::class_<cedrf::SignWeightSpec>(m, "SignWeightSpec")
        .def_readonly("xis", &cedrf::SignWeightSpec::xis)
        .def_readonly("weights", &cedrf::SignWeightSpec::weights)
        .def_readonly("threshold", &cedrf::SignWeightSpec::threshold);

    m.def("local_drf", &cedrf::local_drf, py::arg("model"), py::arg("l"),
          py::arg("rate"));
    m.def("make_sign_weight_spec", &cedrf::make_sign_weight_spec, py::arg("model"),
          py::arg("rates"));
    m.def("cedrf_exact", &cedrf::cedrf_exact, py::arg("model"), py::arg("rates"));
    m.def("cedrf_symmetric", &cedrf::cedrf_symmetric, py::arg("alpha"),
          py::arg("sum_rate"), py::arg("L"));
    m.def("single_observer_rd", &cedrf::single_observer_rd, py::arg("model"),
          py::arg("distortion"));
    m.def("idrf_binary_symmetric", &cedrf::idrf_binary_symmetric, py::arg("alpha"),
          py::arg("distortion"));
    m.def("cedrf_asymptotic", &cedrf::cedrf_asymptotic, py::arg("alpha"),
          py::arg("sum_rate"));
    m.def("cedrf_asymptotic_bound", &cedrf::cedrf_asymptotic_bound, py::arg("alpha"),
          py::arg("sum_rate"));
    m.def(
        "cedrf_montecarlo_signs",
        [](const cedrf::SignWeightSpec& spec, double pi, std::size_t n_samples,
           std::uint64_t seed) {
            const auto est = cedrf::cedrf_montecarlo_signs(spec, pi, n_samples, seed);
            return py::make_tuple(est.mean, est.std_error);
        },
        py::arg("spec"), py::arg("pi"), py::arg("n_samples"), py::arg("seed"));

    // simulators
    py::class_<cedrf::SimulationConfig>(m, "SimulationConfig")
        .def(py::init([](std::size_t n_samples, std::uint64_t seed,
                         std::size_t parallel_chunks) {
                 return cedrf::SimulationConfig{n_samples, seed, parallel_chunks};
             }),
             py::arg("n_samples"), py::arg("seed"), py::arg("parallel_chunks") = 1)
        .def_readwrite("n_samples", &cedrf::SimulationConfig::n_samples)
        .def_readwrite("seed", &cedrf::SimulationConfig::seed)
        .def_readwrite("parallel_chunks", &cedrf::SimulationConfig::parallel_chunks);

    py::class_<cedrf::SimulationResult>(m, "SimulationResult")
        .def_readonly("mean_distortion", &cedrf::SimulationResult::mean_distortion)
        .def_readonly("std_error", &cedrf::SimulationResult::std_error)
        .def_readonly("n_samples", &cedrf::SimulationResult::n_samples)
        .def_readonly("local_distortions", &cedrf::SimulationResult::local_distortions)
        .def_readonly("local_std_errors", &cedrf::SimulationResult::local_std_errors)
        .def_readonly("joint_counts", &cedrf::SimulationResult::joint_counts);

    py::class_<cedrf::CodebookExperimentConfig>(m, "CodebookExperimentConfig")
        .def(py::init([](std::size_t blocklength, double rate, std::size_t n_trials,
                         std::uint64_t seed) {
                 return cedrf::CodebookExperimentConfig{blocklength, rate, n_trials,
                                                        seed};
             }),
             py::arg("blocklength"), py::arg("rate"), py::arg("n_trials"),
             py::arg("seed"))
        .def_readwrite("blocklength", &cedrf::CodebookExperimentConfig::blocklength)
        .def_readwrite("rate", &cedrf::CodebookExperimentConfig::rate)
        .def_readwrite("n_trials", &cedrf::CodebookExperimentConfig::n_trials)
        .def_readwrite("seed", &cedrf::CodebookExperimentConfig::seed);

    m.def("simulate_gaussian_distributed", &cedrf::simulate_gaussian_distributed,
          py::arg("model"), py::arg("rates"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("simulate_gaussian_centralized", &cedrf::simulate_gaussian_centralized,
          py::arg("model"), py::arg("rate"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("simulate_binary", &cedrf::simulate_binary, py::arg("model"), py::arg("rates"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("simulate_binary_codebook", &cedrf::simulate_binary_codebook, py::arg("model"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
}
