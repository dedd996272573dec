#include "caputo/function_model.hpp"

#include <cmath>
#include <utility>

namespace caputo {

FunctionModel::FunctionModel(std::string name, Generator generator)
    : name_(std::move(name)), gen_(std::move(generator)) {
    if (!gen_) throw std::invalid_argument("function model needs a jet generator");
}

Jet FunctionModel::jet_at(double x, int order) const {
    Jet j = gen_(x, order);
    if (j.order() != order || j.base_point() != x)
        throw std::logic_error("jet generator for '" + name_ + "' broke its contract");
    return j;
}

namespace {

// Jet of f(beta * t) at t = x from the jet of f at beta * x: the n-th
// coefficient picks up a factor beta^n.
Jet scale_argument(const Jet& base, double beta, double x) {
    std::vector<double> c(base.order() + 1);
    double bn = 1.0;
    for (int n = 0; n <= base.order(); ++n) {
        c[n] = base.coeff(n) * bn;
        bn *= beta;
    }
    return Jet(x, std::move(c));
}

}  // namespace

FunctionModel make_function(const std::string& name, double beta) {
    using ElementaryJet = Jet (*)(double, int);
    ElementaryJet elem = nullptr;
    if (name == "exp") elem = jet_exp;
    else if (name == "sinh") elem = jet_sinh;
    else if (name == "cosh") elem = jet_cosh;
    else if (name == "tanh") elem = jet_tanh;
    else if (name == "sech") elem = jet_sech;
    else if (name == "sin") elem = jet_sin;
    else if (name == "cos") elem = jet_cos;

    if (elem) {
        return FunctionModel(name, [elem, beta](double x, int order) {
            return scale_argument(elem(beta * x, order), beta, x);
        });
    }
    if (name == "x")
        return FunctionModel(name, [beta](double x, int order) {
            return scale_argument(jet_identity(beta * x, order), beta, x);
        });
    if (name == "x^2")
        return FunctionModel(name, [beta](double x, int order) {
            return scale_argument(jet_power(2.0, beta * x, order), beta, x);
        });
    if (name == "constant")
        return FunctionModel(name, [](double x, int order) { return jet_constant(1.0, x, order); });
    throw std::invalid_argument(
        "unknown function '" + name +
        "' (catalog: x, x^2, exp, sinh, cosh, tanh, sech, sin, cos, constant)");
}

FunctionModel make_power(double exponent) {
    return FunctionModel("t^" + std::to_string(exponent), [exponent](double x, int order) {
        return jet_power(exponent, x, order);
    });
}

FunctionModel make_constant(double value) {
    return FunctionModel("constant(" + std::to_string(value) + ")",
                         [value](double x, int order) { return jet_constant(value, x, order); });
}

FunctionModel compose(const FunctionModel& outer, const FunctionModel& inner) {
    return FunctionModel(outer.name() + "(" + inner.name() + ")",
                         [outer, inner](double x, int order) {
                             return jet_compose(outer, inner.jet_at(x, order));
                         });
}

FunctionModel reciprocal(const FunctionModel& f) {
    return FunctionModel("1/" + f.name(), [f](double x, int order) {
        return jet_constant(1.0, x, order) / f.jet_at(x, order);
    });
}

FunctionModel linear_combination(double a, const FunctionModel& f, double b,
                                 const FunctionModel& g) {
    return FunctionModel(f.name() + "+" + g.name(), [a, f, b, g](double x, int order) {
        Jet jf = f.jet_at(x, order);
        Jet jg = g.jet_at(x, order);
        std::vector<double> c(order + 1);
        for (int n = 0; n <= order; ++n) c[n] = a * jf.coeff(n) + b * jg.coeff(n);
        return Jet(x, std::move(c));
    });
}

FunctionModel from_power_series(const HypSeriesSpec& spec, double scale) {
    return FunctionModel("series(kappa=" + std::to_string(spec.kappa) + ")",
                         [spec, scale](double t, int order) {
                             if (t <= 0.0)
                                 throw std::domain_error("series model requires t > 0");
                             std::vector<double> c(order + 1, 0.0);
                             // Termwise: scale * a_k * t^(kappa + m k), with
                             // a_k the pFq coefficient times zeta^k.
                             double ak = scale;
                             int quiet = 0;
                             int k = 0;
                             for (; k < 1000 && quiet < 2; ++k) {
                                 const double e = spec.kappa + double(spec.m) * k;
                                 const double base = ak * std::pow(t, e);
                                 double fall = 1.0;  // (e)(e-1)...(e-n+1) / n!
                                 double tn = 1.0;
                                 double magnitude = std::fabs(base);
                                 for (int n = 0; n <= order; ++n) {
                                     c[n] += base * fall / tn;
                                     magnitude = std::max(magnitude, std::fabs(base * fall / tn));
                                     fall *= (e - n) / (n + 1);
                                     tn *= t;
                                 }
                                 quiet = (magnitude <= 1e-17 * (1.0 + std::fabs(c[0]))) ? quiet + 1 : 0;
                                 double ratio = spec.zeta / (k + 1.0);
                                 for (double a : spec.upper) ratio *= a + k;
                                 for (double b : spec.lower) ratio /= b + k;
                                 ak *= ratio;
                             }
                             if (quiet < 2)
                                 throw std::runtime_error("series model did not converge at t = " +
                                                          std::to_string(t));
                             return Jet(t, std::move(c));
                         });
}

Jet jet_compose(const FunctionModel& f, const Jet& g_jet) {
    return compose_jets(f.jet_at(g_jet.value(), g_jet.order()), g_jet);
}

}  // namespace caputo
