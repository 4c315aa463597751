#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracverify/eigenbounds.hpp"
#include "fracverify/errors.hpp"
#include "fracverify/identities.hpp"
#include "fracverify/kernels.hpp"
#include "fracverify/quadrature.hpp"
#include "fracverify/report.hpp"
#include "fracverify/specfun.hpp"
#include "fracverify/verifier.hpp"

namespace py = pybind11;

namespace {

py::object as_python(const std::string& json_text) {
    return py::module_::import("json").attr("loads")(json_text);
}

fracverify::GridSpec make_grid(double s_step, double x_step,
                               const std::vector<std::pair<double, double>>& exclusions) {
    fracverify::GridSpec grid;
    grid.s_step = s_step;
    grid.x_step = x_step;
    grid.exclusions = exclusions;
    return grid;
}

fracverify::CaseId parse_variant(const std::string& variant) {
    if (variant == "c") {
        return fracverify::CaseId::HighD_C;
    }
    if (variant == "d") {
        return fracverify::CaseId::HighD_D;
    }
    throw fracverify::ConfigError("variant must be 'c' or 'd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Positivity-certificate verification toolkit for the first eigenfunction "
              "of the fractional Laplacian on the unit ball";

    py::register_exception<fracverify::NumericalError>(m, "NumericalError",
                                                       PyExc_RuntimeError);
    py::register_exception<fracverify::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<fracverify::PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<fracverify::BranchError>(m, "BranchError", PyExc_ValueError);
    py::register_exception<fracverify::CoincidenceError>(m, "CoincidenceError",
                                                         PyExc_ValueError);
    py::register_exception<fracverify::ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("gamma", &fracverify::gamma, py::arg("x"));
    m.def("log_gamma", &fracverify::log_gamma, py::arg("x"));
    m.def("beta", &fracverify::beta, py::arg("z"), py::arg("w"));
    m.def(
        "hyp2f1",
        [](double a, double b, double c, double z) { return fracverify::hyp2f1(a, b, c, z); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    m.def("kappa", &fracverify::kappa, py::arg("n"), py::arg("tau"));
    m.def(
        "fundamental",
        [](int n, double s, double tau, double r) {
            return fracverify::fundamental(fracverify::ProblemParams{n, s},
                                           fracverify::KernelOrder::make(n, tau), r);
        },
        py::arg("n"), py::arg("s"), py::arg("tau"), py::arg("r"));
    m.def(
        "j_tau",
        [](int n, double s, double tau, double x, double y) {
            return fracverify::j_tau(fracverify::ProblemParams{n, s},
                                     fracverify::KernelOrder::make(n, tau), x, y);
        },
        py::arg("n"), py::arg("s"), py::arg("tau"), py::arg("x"), py::arg("y"));
    m.def(
        "gamma_ns",
        [](int n, double s) { return fracverify::gamma_ns(fracverify::ProblemParams{n, s}); },
        py::arg("n"), py::arg("s"));

    m.def(
        "integrate_unit",
        [](const std::function<double(double)>& f, double alpha, double beta, double tol) {
            fracverify::QuadratureSpec spec;
            spec.alpha = alpha;
            spec.beta = beta;
            spec.tol = tol;
            const auto res = fracverify::integrate_unit(f, spec);
            return std::pair<double, double>(res.value, res.error);
        },
        py::arg("f"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("tol") = 1e-10);
    m.def(
        "integrate_tail",
        [](const std::function<double(double)>& f, double s, double tol) {
            fracverify::QuadratureSpec spec;
            spec.tol = tol;
            const auto res = fracverify::integrate_tail(f, s, spec);
            return std::pair<double, double>(res.value, res.error);
        },
        py::arg("f"), py::arg("s"), py::arg("tol") = 1e-10);
    m.def(
        "sphere_mean",
        [](int n, double s, const std::function<double(double)>& g, double r, double y,
           double tol) {
            fracverify::QuadratureSpec spec;
            spec.tol = tol;
            return fracverify::sphere_mean(fracverify::ProblemParams{n, s}, g, r, y, spec);
        },
        py::arg("n"), py::arg("s"), py::arg("g"), py::arg("r"), py::arg("y"),
        py::arg("tol") = 1e-10);
    m.def(
        "poisson_extension",
        [](int n, double s, const std::function<double(double)>& g, double x, double tol) {
            fracverify::QuadratureSpec spec;
            spec.tol = tol;
            return fracverify::poisson_extension(fracverify::ProblemParams{n, s}, g, x, spec);
        },
        py::arg("n"), py::arg("s"), py::arg("g"), py::arg("x"), py::arg("tol") = 1e-10);

    m.def(
        "torsion_constant",
        [](int n, double s) {
            return fracverify::torsion_constant(fracverify::ProblemParams{n, s});
        },
        py::arg("n"), py::arg("s"));
    m.def(
        "lambda_upper",
        [](int n, double s) {
            return fracverify::lambda_upper(fracverify::ProblemParams{n, s}).lambda_upper;
        },
        py::arg("n"), py::arg("s"));
    m.def(
        "lambda_upper_forms",
        [](int n, double s) {
            const fracverify::ProblemParams params{n, s};
            return std::pair<double, double>(fracverify::lambda_upper(params).lambda_upper,
                                             fracverify::lambda_upper_torsion_form(params));
        },
        py::arg("n"), py::arg("s"));
    m.def("lambda_upper_one_d_chain", &fracverify::lambda_upper_one_d_chain, py::arg("s"));

    m.def(
        "x_star",
        [](int n, double s) { return fracverify::x_star(fracverify::ProblemParams{n, s}); },
        py::arg("n"), py::arg("s"));
    m.def("mu", &fracverify::mu, py::arg("s"));
    m.def("mu_forms", &fracverify::mu_forms, py::arg("s"));
    m.def("q_ab", &fracverify::q_ab, py::arg("s"), py::arg("x"), py::arg("a"), py::arg("b"));
    m.def("x_ab", &fracverify::x_ab, py::arg("s"), py::arg("a"), py::arg("b"));
    m.def("one_d_expression", &fracverify::one_d_expression, py::arg("s"), py::arg("x"));

    m.def("log_case_constant", &fracverify::log_case_constant);
    m.def("log_case_stationary_point", &fracverify::log_case_stationary_point);
    m.def("log_case_closed_form_min", &fracverify::log_case_closed_form_min);
    m.def("log_case_expression", &fracverify::log_case_expression, py::arg("t"));
    m.def(
        "log_case_certificate",
        [](long points) {
            return as_python(fracverify::to_json(fracverify::log_case_certificate(points)));
        },
        py::arg("points") = 200000);

    m.def(
        "big_m",
        [](int n, double s) { return fracverify::big_m(fracverify::ProblemParams{n, s}); },
        py::arg("n"), py::arg("s"));
    m.def(
        "big_m_forms",
        [](int n, double s) {
            return fracverify::big_m_forms(fracverify::ProblemParams{n, s});
        },
        py::arg("n"), py::arg("s"));
    m.def(
        "lhs_qc",
        [](int n, double s, double x) {
            return fracverify::lhs_qc(fracverify::ProblemParams{n, s}, x);
        },
        py::arg("n"), py::arg("s"), py::arg("x"));
    m.def(
        "lhs_qd",
        [](int n, double s, double x) {
            return fracverify::lhs_qd(fracverify::ProblemParams{n, s}, x);
        },
        py::arg("n"), py::arg("s"), py::arg("x"));

    m.def(
        "verify_one_d",
        [](double s_step, double x_step,
           const std::vector<std::pair<double, double>>& exclusions) {
            return as_python(
                fracverify::to_json(fracverify::verify_one_d(make_grid(s_step, x_step, exclusions))));
        },
        py::arg("s_step") = 1e-3, py::arg("x_step") = 1e-3,
        py::arg("exclusions") = std::vector<std::pair<double, double>>{});
    m.def(
        "verify_high_d",
        [](const std::vector<int>& dims, const std::string& variant, double s_step,
           double x_step, const std::vector<std::pair<double, double>>& exclusions) {
            return as_python(fracverify::to_json(fracverify::verify_high_d(
                dims, make_grid(s_step, x_step, exclusions), parse_variant(variant))));
        },
        py::arg("dims"), py::arg("variant") = "c", py::arg("s_step") = 1e-3,
        py::arg("x_step") = 1e-3,
        py::arg("exclusions") = std::vector<std::pair<double, double>>{});
    m.def(
        "high_d_min_curve",
        [](int n, const std::string& variant, double s_step, double x_step) {
            const auto grid = make_grid(s_step, x_step, {});
            return std::pair<std::vector<double>, std::vector<double>>(
                grid.s_points(),
                fracverify::high_d_min_curve(n, grid, parse_variant(variant)));
        },
        py::arg("n"), py::arg("variant") = "c", py::arg("s_step") = 1e-3,
        py::arg("x_step") = 1e-3);

    m.def(
        "direct_qbis_oracle",
        [](int n, double s, double x, double tol) {
            fracverify::QuadratureSpec spec;
            spec.tol = tol;
            return fracverify::direct_qbis_oracle(fracverify::ProblemParams{n, s}, x, spec);
        },
        py::arg("n"), py::arg("s"), py::arg("x"), py::arg("tol") = 1e-9);
    m.def(
        "qbis_oracle_normalization",
        [](int n, double s) {
            return fracverify::qbis_oracle_normalization(fracverify::ProblemParams{n, s});
        },
        py::arg("n"), py::arg("s"));

    m.def(
        "run_identity_suite",
        [](double gamma_perturbation) {
            return as_python(
                fracverify::to_json(fracverify::run_identity_suite(gamma_perturbation)));
        },
        py::arg("gamma_perturbation") = 0.0);
}
