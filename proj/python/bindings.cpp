#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lorasic/analytic.hpp"
#include "lorasic/config.hpp"
#include "lorasic/errors.hpp"
#include "lorasic/experiments.hpp"
#include "lorasic/mcsim.hpp"
#include "lorasic/params.hpp"
#include "lorasic/specfun.hpp"

namespace py = pybind11;
using namespace lorasic;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Coverage probabilities of LoRa uplinks with successive interference cancellation";

    py::register_exception<OutOfCoverageError>(m, "OutOfCoverageError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SfParams>(m, "SfParams")
        .def_readonly("sf", &SfParams::sf)
        .def_readonly("toa_ms", &SfParams::toa_ms)
        .def_readonly("bitrate_kbps", &SfParams::bitrate_kbps)
        .def_readonly("sensitivity_dbm", &SfParams::sensitivity_dbm)
        .def_readonly("snr_threshold_db", &SfParams::snr_threshold_db)
        .def_readonly("duty_cycle", &SfParams::duty_cycle)
        .def("__repr__", [](SfParams const& p) { return "<SfParams SF" + std::to_string(p.sf) + ">"; });

    py::class_<NetworkConfig>(m, "NetworkConfig")
        .def(py::init(&NetworkConfig::defaults))
        .def_static("from_text", &parse_config, py::arg("text"))
        .def("set", [](NetworkConfig& cfg, std::string const& key,
                       std::string const& value) { apply_override(cfg, key, value); })
        .def_property_readonly("radius", [](NetworkConfig const& c) { return c.layout.radius(); })
        .def_property_readonly("ring_boundaries",
                               [](NetworkConfig const& c) {
                                   return std::vector<double>(c.layout.boundaries.begin(), c.layout.boundaries.end());
                               })
        .def_property_readonly("gamma_db", [](NetworkConfig const& c) { return c.radio.capture_threshold_db; })
        .def_property_readonly("path_loss_exp", [](NetworkConfig const& c) { return c.radio.path_loss_exp; })
        .def_property_readonly("noise_dbm", [](NetworkConfig const& c) {
            return noise_power_dbm(c.radio.noise_figure_db, c.radio.bandwidth_hz);
        });

    py::class_<CoverageBreakdown>(m, "CoverageBreakdown")
        .def_readonly("h1", &CoverageBreakdown::h1)
        .def_readonly("q1", &CoverageBreakdown::q1)
        .def_readonly("q2", &CoverageBreakdown::q2)
        .def_readonly("c1", &CoverageBreakdown::c1)
        .def_readonly("c1_sic", &CoverageBreakdown::c1_sic)
        .def_readonly("alpha", &CoverageBreakdown::alpha)
        .def_readonly("ring", &CoverageBreakdown::ring)
        .def_readonly("d1", &CoverageBreakdown::d1);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("trials", &McEstimate::trials)
        .def_readonly("ci95_halfwidth", &McEstimate::ci95_halfwidth);

    py::class_<McReport>(m, "McReport")
        .def_readonly("connected", &McReport::connected)
        .def_readonly("captured", &McReport::captured)
        .def_readonly("success_c1", &McReport::success_c1)
        .def_readonly("success_c1_sic", &McReport::success_c1_sic)
        .def_readonly("single_interferer", &McReport::single_interferer);

    py::class_<CapacityRow>(m, "CapacityRow")
        .def_readonly("alpha", &CapacityRow::alpha)
        .def_readonly("nodes", &CapacityRow::nodes)
        .def_readonly("total", &CapacityRow::total);

    m.def("default_sf_table", &default_sf_table);
    m.def("duty_cycle_from_toa", &duty_cycle_from_toa, py::arg("toa_ms"), py::arg("period_ms"));
    m.def("noise_power_dbm", &noise_power_dbm, py::arg("noise_figure_db"), py::arg("bandwidth_hz"));
    m.def("hyp2f1_1b", &hyp2f1_1b, py::arg("b"), py::arg("z"));
    m.def("q2_integral_quadrature", &q2_integral_quadrature, py::arg("d1"), py::arg("gamma"), py::arg("eta"),
          py::arg("l_lo"), py::arg("l_hi"));

    m.def("connection_probability", &connection_probability, py::arg("d1"), py::arg("cfg"));
    m.def("capture_probability", &capture_probability, py::arg("d1"), py::arg("cfg"), py::arg("alpha"));
    m.def("sic_capture_probability", &sic_capture_probability, py::arg("d1"), py::arg("cfg"), py::arg("alpha"));
    m.def("coverage", &coverage, py::arg("d1"), py::arg("cfg"), py::arg("alpha"));
    m.def("single_interferer_given_collision", &single_interferer_given_collision, py::arg("alpha"));

    m.def(
        "estimate",
        [](double d1, NetworkConfig const& cfg, double alpha, std::uint64_t trials, std::uint64_t seed,
           unsigned workers) {
            py::gil_scoped_release release;
            return estimate(d1, cfg, alpha, trials, seed, workers);
        },
        py::arg("d1"), py::arg("cfg"), py::arg("alpha"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 0);

    m.def("capacity_table",
          [](std::vector<double> const& alphas) { return capacity_table(alphas, default_sf_table()); },
          py::arg("alphas"));
    m.def("find_alpha_for_target", &find_alpha_for_target, py::arg("target"), py::arg("d1"), py::arg("cfg"),
          py::arg("with_sic"), py::arg("alpha_max") = kDefaultAlphaMax);
}
