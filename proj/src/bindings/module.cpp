// Python bindings for the main operations: scalar special functions, jets,
// the Caputo derivative routes, repeated-integration lifts, and the
// composition rules.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "caputo/composition.hpp"
#include "caputo/derivative.hpp"
#include "caputo/eit.hpp"
#include "caputo/function_model.hpp"

namespace py = pybind11;
using namespace caputo;

namespace {

QuadratureConfig quad_cfg(int nodes, int subdivisions) {
    QuadratureConfig cfg;
    cfg.nodes = nodes;
    cfg.subdivisions = subdivisions;
    return cfg;
}

TruncationPlan plan_of(int terms, int inner_terms, double tol) {
    TruncationPlan plan;
    plan.outer_terms = terms;
    plan.inner_terms = inner_terms;
    plan.tol = tol;
    return plan;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Caputo fractional derivatives of elementary and composite functions";

    py::class_<SeriesResult>(m, "SeriesResult")
        .def_readonly("value", &SeriesResult::value)
        .def_readonly("terms_used", &SeriesResult::terms_used)
        .def_readonly("last_term", &SeriesResult::last_term)
        .def_readonly("converged", &SeriesResult::converged)
        .def("__repr__", [](const SeriesResult& r) {
            return "SeriesResult(value=" + std::to_string(r.value) +
                   ", terms_used=" + std::to_string(r.terms_used) +
                   ", converged=" + (r.converged ? std::string("True") : std::string("False")) +
                   ")";
        });

    // Scalar special functions.
    m.def("gamma", &caputo::gamma, py::arg("x"), "Gamma(x) for real non-pole x");
    m.def("log_gamma", &caputo::log_gamma, py::arg("x"), "log Gamma(x), x > 0");
    m.def("gen_binomial", &gen_binomial, py::arg("alpha"), py::arg("l"),
          "generalized binomial coefficient C(alpha, l)");
    m.def("sinc_factor", &sinc_factor, py::arg("alpha"), py::arg("k"),
          "sin(pi(alpha-k)) / (pi(alpha-k)) with exact integer handling");
    m.def(
        "phyperg",
        [](const std::vector<double>& upper, const std::vector<double>& lower, double z,
           double tol, int max_terms) { return phyperg(upper, lower, z, tol, max_terms); },
        py::arg("upper"), py::arg("lower"), py::arg("z"), py::arg("tol") = 1e-14,
        py::arg("max_terms") = 500, "generalized hypergeometric series pFq");

    py::class_<HypSeriesSpec>(m, "HypSeriesSpec")
        .def(py::init<std::vector<double>, std::vector<double>, double, double, int>(),
             py::arg("upper"), py::arg("lower"), py::arg("kappa") = 0.0, py::arg("zeta") = 1.0,
             py::arg("m") = 1)
        .def_readonly("upper", &HypSeriesSpec::upper)
        .def_readonly("lower", &HypSeriesSpec::lower)
        .def_readonly("kappa", &HypSeriesSpec::kappa)
        .def_readonly("zeta", &HypSeriesSpec::zeta)
        .def_readonly("m", &HypSeriesSpec::m);
    m.def(
        "evaluate_power_law",
        [](const HypSeriesSpec& spec, double x, double scale) {
            return evaluate_power_law(spec, x, scale);
        },
        py::arg("spec"), py::arg("x"), py::arg("scale") = 1.0,
        "scale * x^kappa * pFq(zeta x^m)");

    // Jets and function models.
    py::class_<Jet>(m, "Jet")
        .def_property_readonly("order", &Jet::order)
        .def_property_readonly("base_point", &Jet::base_point)
        .def_property_readonly("value", &Jet::value)
        .def("coeff", &Jet::coeff, py::arg("n"))
        .def("derivative", &Jet::derivative, py::arg("n"));

    py::class_<FunctionModel>(m, "FunctionModel")
        .def_property_readonly("name", &FunctionModel::name)
        .def("value", &FunctionModel::value, py::arg("x"))
        .def("derivative", &FunctionModel::derivative, py::arg("x"), py::arg("n"))
        .def("jet_at", &FunctionModel::jet_at, py::arg("x"), py::arg("order"));

    m.def("make_function", &make_function, py::arg("name"), py::arg("beta") = 1.0,
          "catalog model evaluating f(beta t)");
    m.def("make_power", &make_power, py::arg("exponent"));
    m.def("make_constant", &make_constant, py::arg("value"));
    m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
    m.def("reciprocal", &reciprocal, py::arg("f"));
    m.def("linear_combination", &linear_combination, py::arg("a"), py::arg("f"), py::arg("b"),
          py::arg("g"));
    m.def("from_power_series", &from_power_series, py::arg("spec"), py::arg("scale") = 1.0);

    // Caputo derivative routes.
    m.def(
        "caputo_quadrature",
        [](const FunctionModel& f, double alpha, double x, int nodes, int subdivisions) {
            return caputo_quadrature(f, FractionalOrder(alpha), x, quad_cfg(nodes, subdivisions));
        },
        py::arg("f"), py::arg("alpha"), py::arg("x"), py::arg("nodes") = 40,
        py::arg("subdivisions") = 8, "Caputo derivative by weighted Gauss quadrature");
    m.def(
        "caputo_series",
        [](const FunctionModel& f, double alpha, double x, int n_terms, double tol) {
            return caputo_series(f, FractionalOrder(alpha), x, n_terms, tol);
        },
        py::arg("f"), py::arg("alpha"), py::arg("x"), py::arg("n_terms") = 10,
        py::arg("tol") = 1e-14, "Caputo derivative by the integer-derivative expansion");
    m.def("derivative_series", &derivative_series, py::arg("f"), py::arg("order"), py::arg("x"),
          py::arg("n_terms") = 10, py::arg("tol") = 1e-14,
          "expansion at any real order <= 1 (negative: repeated integration)");

    // Repeated-integration lifts.
    py::class_<LiftedSeries>(m, "LiftedSeries")
        .def_readonly("series", &LiftedSeries::series)
        .def("gamma_ratio", &LiftedSeries::gamma_ratio)
        .def(
            "evaluate",
            [](const LiftedSeries& ls, double x, double tol) { return ls.evaluate(x, tol); },
            py::arg("x"), py::arg("tol") = 1e-14);
    m.def(
        "eit_lift", [](const HypSeriesSpec& base, int depth) { return eit_lift(base, depth); },
        py::arg("series"), py::arg("depth"),
        "repeated integration as a hypergeometric parameter lift");
    m.def(
        "cauchy_repeated_integral",
        [](const FunctionModel& f, int depth, double x, int nodes, int subdivisions) {
            return cauchy_repeated_integral(f, depth, x, quad_cfg(nodes, subdivisions));
        },
        py::arg("f"), py::arg("depth"), py::arg("x"), py::arg("nodes") = 40,
        py::arg("subdivisions") = 8, "direct n-fold integral from 0");
    m.def(
        "eit_transform_check",
        [](const HypSeriesSpec& spec, double c, double d, double z, double validate_tol) {
            return eit_transform_check(spec, c, d, z, validate_tol);
        },
        py::arg("spec"), py::arg("c"), py::arg("d"), py::arg("z"),
        py::arg("validate_tol") = 0.0,
        "weighted-integral identity, optionally self-checked by quadrature");
    m.def(
        "caputo_sinh",
        [](double beta, double alpha, double x) {
            return caputo_sinh(beta, FractionalOrder(alpha), x);
        },
        py::arg("beta"), py::arg("alpha"), py::arg("x"),
        "closed form of the Caputo derivative of sinh(beta t)");
    m.def(
        "caputo_sinh_shifted",
        [](double beta, double alpha, int l, double x) {
            return caputo_sinh_shifted(beta, FractionalOrder(alpha), l, x);
        },
        py::arg("beta"), py::arg("alpha"), py::arg("l"), py::arg("x"),
        "closed form at order alpha - l");

    // Composition rules.
    m.def(
        "product_rule",
        [](const FunctionModel& f, const FunctionModel& g, double alpha, double x, int terms,
           int inner_terms, double tol, const ShiftedDerivativeMap& closed_form) {
            return product_rule(f, g, FractionalOrder(alpha), x,
                                plan_of(terms, inner_terms, tol), closed_form);
        },
        py::arg("f"), py::arg("g"), py::arg("alpha"), py::arg("x"), py::arg("terms") = 10,
        py::arg("inner_terms") = 0, py::arg("tol") = 1e-14,
        py::arg("closed_form") = nullptr,
        "fractional product rule; closed_form(l, x) optionally supplies D^(alpha-l)[f]");
    m.def("di_bruno_kth", &di_bruno_kth, py::arg("f"), py::arg("g"), py::arg("k"), py::arg("x"),
          "k-th derivative of f(g(x))");
    m.def("inverse_derivative", &inverse_derivative, py::arg("f"), py::arg("n"), py::arg("x"),
          "n-th derivative of 1/f(x)");
    m.def(
        "chain_weight",
        [](const FunctionModel& g, double alpha, int m_index, double x, int inner_terms) {
            return chain_weight(g, FractionalOrder(alpha), m_index, x, inner_terms);
        },
        py::arg("g"), py::arg("alpha"), py::arg("m"), py::arg("x"), py::arg("inner_terms"),
        "normal-ordered operator weight W_m");
    m.def(
        "chain_rule",
        [](const FunctionModel& f, const FunctionModel& g, double alpha, double x, int terms,
           int inner_terms, double tol) {
            return chain_rule(f, g, FractionalOrder(alpha), x, plan_of(terms, inner_terms, tol));
        },
        py::arg("f"), py::arg("g"), py::arg("alpha"), py::arg("x"), py::arg("terms") = 10,
        py::arg("inner_terms") = 0, py::arg("tol") = 1e-14, "fractional chain rule");
    m.def(
        "caputo_tanh",
        [](double beta, double alpha, double x, int terms) {
            return caputo_tanh(beta, FractionalOrder(alpha), x, terms);
        },
        py::arg("beta"), py::arg("alpha"), py::arg("x"), py::arg("terms") = 10,
        "Caputo derivative of tanh(beta t) via the product rule");
}
