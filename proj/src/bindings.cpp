#include "pdms/observables.hpp"
#include "pdms/pdm_model.hpp"
#include "pdms/specialfn.hpp"
#include "pdms/squeezed_state.hpp"
#include "pdms/validate.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pdms;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Squeezed coherent states of the position-dependent-mass oscillator";

    // specialfn
    m.def("log_gamma", &specialfn::log_gamma, py::arg("x"));
    m.def("gamma_ratio_log", &specialfn::gamma_ratio_log, py::arg("n"), py::arg("c"));
    m.def("gegenbauer", &specialfn::gegenbauer, py::arg("n"), py::arg("lam"), py::arg("s"));
    m.def("gegenbauer_derivative", &specialfn::gegenbauer_derivative, py::arg("n"),
          py::arg("lam"), py::arg("s"));
    m.def("hermite", &specialfn::hermite, py::arg("n"), py::arg("x"));
    m.def("hyp2f1_terminating", &specialfn::hyp2f1_terminating, py::arg("n"),
          py::arg("beta"), py::arg("c"), py::arg("zarg"));

    // model
    py::class_<model::ModelParams>(m, "ModelParams")
        .def(py::init([](double m0, double omega, double hbar, double alpha) {
                 return model::ModelParams{m0, omega, hbar, alpha};
             }),
             py::arg("m0") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0,
             py::arg("alpha") = 0.0)
        .def_readwrite("m0", &model::ModelParams::m0)
        .def_readwrite("omega", &model::ModelParams::omega)
        .def_readwrite("hbar", &model::ModelParams::hbar)
        .def_readwrite("alpha", &model::ModelParams::alpha);

    py::class_<model::DerivedConstants>(m, "DerivedConstants")
        .def_readonly("deformed", &model::DerivedConstants::deformed)
        .def_readonly("kappa", &model::DerivedConstants::kappa)
        .def_readonly("lam", &model::DerivedConstants::lam)
        .def_readonly("a", &model::DerivedConstants::a)
        .def_readonly("b", &model::DerivedConstants::b)
        .def_readonly("c_shift", &model::DerivedConstants::c_shift)
        .def_readonly("alpha", &model::DerivedConstants::alpha);

    m.def("mass_at", &model::mass_at, py::arg("params"), py::arg("x"));
    m.def("derive_constants", &model::derive_constants, py::arg("params"));
    m.def("energy",
          py::overload_cast<const model::ModelParams&, int>(&model::energy),
          py::arg("params"), py::arg("n"));
    m.def("dimensionless_energy", &model::dimensionless_energy, py::arg("consts"),
          py::arg("n"));
    m.def("rho_log",
          [](const model::DerivedConstants& k, int n) { return model::rho_log(k, n).log_mag; },
          py::arg("consts"), py::arg("n"));
    m.def("eigenfunction_q", &model::eigenfunction_q, py::arg("consts"), py::arg("n"),
          py::arg("q"));
    m.def("eigenfunction_x", &model::eigenfunction_x, py::arg("consts"), py::arg("n"),
          py::arg("x"));
    m.def("eigenfunction_x_derivative", &model::eigenfunction_x_derivative,
          py::arg("consts"), py::arg("n"), py::arg("x"));

    // states
    py::enum_<state::Method>(m, "Method")
        .value("recurrence", state::Method::recurrence)
        .value("closed_form", state::Method::closed_form)
        .value("hermite_limit", state::Method::hermite_limit);

    py::class_<state::CoefficientVector>(m, "CoefficientVector")
        .def_readonly("amplitudes", &state::CoefficientVector::amplitudes)
        .def_readonly("norm_factor_log", &state::CoefficientVector::norm_factor_log)
        .def_readonly("tail_weight", &state::CoefficientVector::tail_weight)
        .def_readonly("converged", &state::CoefficientVector::converged)
        .def_property_readonly("n_max", &state::CoefficientVector::n_max);

    m.def("coeffs_recurrence", &state::coeffs_recurrence, py::arg("consts"),
          py::arg("z"), py::arg("gamma"), py::arg("n_max") = -1);
    m.def("coeffs_closed_form", &state::coeffs_closed_form, py::arg("consts"),
          py::arg("z"), py::arg("gamma"), py::arg("n_max") = -1);
    m.def("coeffs_hermite_limit", &state::coeffs_hermite_limit, py::arg("consts"),
          py::arg("z"), py::arg("gamma"), py::arg("n_max") = -1);
    m.def("evolve", &state::evolve, py::arg("state"), py::arg("t"));
    m.def("overlap", &state::overlap, py::arg("s1"), py::arg("s2"));

    py::class_<state::ComparisonReport>(m, "ComparisonReport")
        .def_readonly("deviation", &state::ComparisonReport::deviation)
        .def_readonly("max_deviation", &state::ComparisonReport::max_deviation)
        .def_readonly("first_exceeding", &state::ComparisonReport::first_exceeding)
        .def_readonly("n_max", &state::ComparisonReport::n_max);

    m.def("compare_constructions", &state::compare_constructions, py::arg("consts"),
          py::arg("z"), py::arg("gamma"), py::arg("n_max") = -1);

    // observables
    py::class_<obs::ObservableReport>(m, "ObservableReport")
        .def_readonly("mean_x", &obs::ObservableReport::mean_x)
        .def_readonly("mean_p", &obs::ObservableReport::mean_p)
        .def_readonly("mean_x2", &obs::ObservableReport::mean_x2)
        .def_readonly("mean_p2", &obs::ObservableReport::mean_p2)
        .def_readonly("var_x", &obs::ObservableReport::var_x)
        .def_readonly("var_p", &obs::ObservableReport::var_p)
        .def_readonly("uncertainty_product", &obs::ObservableReport::uncertainty_product)
        .def_readonly("uncertainty_product_factored",
                      &obs::ObservableReport::uncertainty_product_factored)
        .def_readonly("A", &obs::ObservableReport::A)
        .def_readonly("B", &obs::ObservableReport::B)
        .def_readonly("mean_n", &obs::ObservableReport::mean_n)
        .def_readonly("mean_n2", &obs::ObservableReport::mean_n2)
        .def_readonly("mandel_q", &obs::ObservableReport::mandel_q);

    m.def("report", &obs::report, py::arg("state"));
    m.def("photon_distribution", &obs::photon_distribution, py::arg("state"));
    m.def("mandel_q", &obs::mandel_q, py::arg("state"));
    m.def("uncertainty_direct", &obs::uncertainty_direct, py::arg("state"));
    m.def("uncertainty_factored", &obs::uncertainty_factored, py::arg("state"));
    m.def("position_density", &obs::position_density, py::arg("state"), py::arg("t"),
          py::arg("x_grid"));

    py::class_<obs::NAlphaResult>(m, "NAlphaResult")
        .def_readonly("n_alpha", &obs::NAlphaResult::n_alpha)
        .def_readonly("mean_x_shifted_sq", &obs::NAlphaResult::mean_x_shifted_sq)
        .def_readonly("mean_pi_sq", &obs::NAlphaResult::mean_pi_sq)
        .def_readonly("mean_x_sq", &obs::NAlphaResult::mean_x_sq)
        .def_readonly("richardson_delta", &obs::NAlphaResult::richardson_delta);

    m.def("n_alpha_quadrature", &obs::n_alpha_quadrature, py::arg("state"),
          py::arg("omega0") = -1.0);

    // validation
    py::class_<validate::CheckResult>(m, "CheckResult")
        .def_readonly("name", &validate::CheckResult::name)
        .def_readonly("pass_", &validate::CheckResult::pass)
        .def_readonly("observed", &validate::CheckResult::observed)
        .def_readonly("threshold", &validate::CheckResult::threshold);

    py::class_<validate::ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &validate::ValidationReport::checks)
        .def("all_pass", &validate::ValidationReport::all_pass);

    m.def("run_validation", &validate::run_all);
}
