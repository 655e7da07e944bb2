// module.cpp -- pybind11 bindings for the main operations.

#include "twrc/bessel.hpp"
#include "twrc/channel.hpp"
#include "twrc/exponent.hpp"
#include "twrc/power_alloc.hpp"
#include "twrc/rate_alloc.hpp"
#include "twrc/scenario.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace twrc;

PYBIND11_MODULE(_twrc, m) {
    m.doc() = "Error exponents and resource allocation for amplify-and-forward "
              "two-way relay links";

    py::enum_<Mode>(m, "Mode")
        .value("TwoWay", Mode::TwoWay)
        .value("OneWay", Mode::OneWay);
    py::enum_<Link>(m, "Link")
        .value("L1", Link::L1)
        .value("L2", Link::L2);

    py::class_<ChannelConfig>(m, "ChannelConfig")
        .def(py::init<>())
        .def_readwrite("omega1", &ChannelConfig::omega1)
        .def_readwrite("omega2", &ChannelConfig::omega2)
        .def_readwrite("n0", &ChannelConfig::n0)
        .def_readwrite("p1", &ChannelConfig::p1)
        .def_readwrite("p2", &ChannelConfig::p2)
        .def_readwrite("p_relay", &ChannelConfig::p_relay)
        .def_readwrite("total_power", &ChannelConfig::total_power)
        .def_readwrite("mode", &ChannelConfig::mode);

    py::class_<FadingState>(m, "FadingState")
        .def(py::init<>())
        .def(py::init([](double a1, double a2) {
                 FadingState st;
                 st.alpha1 = a1;
                 st.alpha2 = a2;
                 return st;
             }),
             py::arg("alpha1"), py::arg("alpha2"))
        .def_readwrite("alpha1", &FadingState::alpha1)
        .def_readwrite("alpha2", &FadingState::alpha2);

    py::class_<LinkStats>(m, "LinkStats")
        .def(py::init<>())
        .def_readwrite("link", &LinkStats::link)
        .def_readwrite("eta", &LinkStats::eta)
        .def_readwrite("lambda_", &LinkStats::lambda)
        .def_readwrite("mu", &LinkStats::mu);

    py::class_<ExponentResult>(m, "ExponentResult")
        .def_readonly("rate", &ExponentResult::rate)
        .def_readonly("rho_opt", &ExponentResult::rho_opt)
        .def_readonly("exponent", &ExponentResult::exponent)
        .def_readonly("link", &ExponentResult::link)
        .def_readonly("mode", &ExponentResult::mode);

    py::class_<LinkSummary>(m, "LinkSummary")
        .def_readonly("capacity", &LinkSummary::capacity)
        .def_readonly("cutoff_rate", &LinkSummary::cutoff_rate)
        .def_readonly("critical_rate", &LinkSummary::critical_rate)
        .def_readonly("e0_at_1", &LinkSummary::e0_at_1);

    py::class_<RatePair>(m, "RatePair")
        .def(py::init<>())
        .def(py::init([](double r1, double r2) { return RatePair{r1, r2}; }),
             py::arg("r1"), py::arg("r2"))
        .def_readwrite("r1", &RatePair::r1)
        .def_readwrite("r2", &RatePair::r2);

    py::class_<LinkModel>(m, "LinkModel")
        .def_readonly("stats", &LinkModel::stats)
        .def_readonly("mode", &LinkModel::mode)
        .def_readonly("summary", &LinkModel::summary)
        .def("exponent_at", &LinkModel::exponent_at, py::arg("rate"));

    py::enum_<AllocationMethod>(m, "AllocationMethod")
        .value("TheoremClosedForm", AllocationMethod::TheoremClosedForm)
        .value("ExactIntersection", AllocationMethod::ExactIntersection)
        .value("QuasiOptimal", AllocationMethod::QuasiOptimal);

    py::class_<AllocationResult>(m, "AllocationResult")
        .def_readonly("pair", &AllocationResult::pair)
        .def_readonly("bottleneck", &AllocationResult::bottleneck)
        .def_readonly("decisive_sum_rate", &AllocationResult::decisive_sum_rate)
        .def_readonly("quasi_decisive_sum_rate", &AllocationResult::quasi_decisive_sum_rate)
        .def_property_readonly("branch", [](const AllocationResult& r) {
            return std::string(to_string(r.branch));
        });

    py::class_<PowerProblem>(m, "PowerProblem")
        .def(py::init<>())
        .def_readwrite("state", &PowerProblem::state)
        .def_readwrite("p_relay", &PowerProblem::p_relay)
        .def_readwrite("total_power", &PowerProblem::total_power)
        .def_readwrite("rho", &PowerProblem::rho)
        .def_readwrite("rates", &PowerProblem::rates);

    py::class_<PowerSolution>(m, "PowerSolution")
        .def_readonly("p1", &PowerSolution::p1)
        .def_readonly("p2", &PowerSolution::p2)
        .def_readonly("instantaneous_exponent", &PowerSolution::instantaneous_exponent)
        .def_readonly("iterations", &PowerSolution::iterations)
        .def_readonly("gap", &PowerSolution::gap);

    py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
        .def_readonly("mean", &MonteCarloEstimate::mean)
        .def_readonly("std_error", &MonteCarloEstimate::std_error)
        .def_readonly("samples", &MonteCarloEstimate::samples);

    m.def("bessel_k0", &bessel_k0, py::arg("x"));
    m.def("bessel_k1", &bessel_k1, py::arg("x"));
    m.def("effective_snr", &effective_snr, py::arg("cfg"), py::arg("state"), py::arg("link"));
    m.def("ideal_snr", &ideal_snr, py::arg("cfg"), py::arg("state"), py::arg("link"));
    m.def("link_stats", &link_stats, py::arg("cfg"), py::arg("link"));
    m.def("sample_fading", &sample_fading, py::arg("cfg"), py::arg("seed"), py::arg("n"));
    m.def(
        "ideal_snr_pdf",
        [](const LinkStats& s, double g) { return ideal_snr_pdf(s, g); },
        py::arg("stats"), py::arg("gamma"));
    m.def(
        "gallager_e0",
        [](const LinkStats& s, double rho) { return gallager_e0(s, rho); },
        py::arg("stats"), py::arg("rho"));
    m.def(
        "rcee",
        [](const LinkStats& s, double rate, Mode mode) { return rcee(s, rate, mode); },
        py::arg("stats"), py::arg("rate"), py::arg("mode"));
    m.def(
        "link_summary",
        [](const LinkStats& s, Mode mode) { return link_summary(s, mode); },
        py::arg("stats"), py::arg("mode"));
    m.def(
        "make_link_model",
        [](const LinkStats& s, Mode mode) { return make_link_model(s, mode); },
        py::arg("stats"), py::arg("mode"));
    m.def("bottleneck_exponent", &bottleneck_exponent, py::arg("l1"), py::arg("l2"), py::arg("pair"));
    m.def("bottleneck_probability_bound", &bottleneck_probability_bound,
          py::arg("l1"), py::arg("l2"), py::arg("pair"), py::arg("block_length"));
    m.def("plateau_edge", &plateau_edge, py::arg("l1"), py::arg("l2"), py::arg("r2"));
    m.def("allocate_rates", &allocate_rates, py::arg("l1"), py::arg("l2"),
          py::arg("sum_rate"), py::arg("method"));
    m.def("instantaneous_exponent", &instantaneous_exponent,
          py::arg("p1"), py::arg("p2"), py::arg("prob"), py::arg("link"));
    m.def(
        "optimize_power",
        [](const PowerProblem& prob, double eps) { return optimize_power(prob, eps); },
        py::arg("prob"), py::arg("eps") = 1e-5);
    m.def("averaged_optimized_exponent", &averaged_optimized_exponent,
          py::arg("cfg"), py::arg("rates"), py::arg("n_samples"), py::arg("seed"),
          py::arg("eps") = 1e-5, py::arg("workers") = 0);
    m.def("averaged_uniform_exponent", &averaged_uniform_exponent,
          py::arg("cfg"), py::arg("rates"), py::arg("n_samples"), py::arg("seed"),
          py::arg("workers") = 0);
}
