// FunctionModel: a named function known through its Taylor jets at arbitrary
// points, plus the catalog of built-in models and combinators.
#pragma once

#include <functional>
#include <string>

#include "caputo/jet.hpp"
#include "caputo/special_functions.hpp"

namespace caputo {

class FunctionModel {
public:
    using Generator = std::function<Jet(double x, int order)>;

    FunctionModel(std::string name, Generator generator);

    const std::string& name() const noexcept { return name_; }

    // Jet of the function at x through the given order (validated).
    Jet jet_at(double x, int order) const;

    double value(double x) const { return jet_at(x, 0).value(); }
    double derivative(double x, int n) const { return jet_at(x, n).derivative(n); }

private:
    std::string name_;
    Generator gen_;
};

// Built-in catalog: "x", "x^2", "exp", "sinh", "cosh", "tanh", "sech", "sin",
// "cos", "constant". The model evaluates f(beta * x); "constant" is 1.
FunctionModel make_function(const std::string& name, double beta = 1.0);

FunctionModel make_power(double exponent);   // t -> t^exponent
FunctionModel make_constant(double value);   // t -> value

// x -> outer(inner(x)), jets by power-series composition.
FunctionModel compose(const FunctionModel& outer, const FunctionModel& inner);

// x -> 1 / f(x), jets by division.
FunctionModel reciprocal(const FunctionModel& f);

// x -> a * f(x) + b * g(x).
FunctionModel linear_combination(double a, const FunctionModel& f, double b,
                                 const FunctionModel& g);

// t -> scale * t^kappa * pFq(zeta * t^m); jets by termwise differentiation of
// the series, so any derivative order is available at t > 0.
FunctionModel from_power_series(const HypSeriesSpec& spec, double scale = 1.0);

// Jet of f at the value carried by g_jet, composed with g_jet: the jet of
// f(g(.)) at g_jet's base point.
Jet jet_compose(const FunctionModel& f, const Jet& g_jet);

}  // namespace caputo
