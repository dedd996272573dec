#include "caputo/derivative.hpp"

#include <cmath>

#include "caputo/quadrature.hpp"
#include "caputo/special_functions.hpp"

namespace caputo {

namespace {

void require_positive_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("caputo derivative requires x > 0");
}

}  // namespace

double caputo_quadrature(const FunctionModel& f, FractionalOrder alpha, double x,
                         const QuadratureConfig& cfg) {
    require_positive_x(x);
    cfg.validate();
    if (alpha.is_zero()) return f.value(x) - f.value(0.0);
    if (alpha.is_one()) return f.derivative(x, 1);

    const double a = alpha.value();
    const auto fprime = [&](double t) { return f.jet_at(t, 1).derivative(1); };

    // int_0^1 (1-s)^(-a) f'(x s) ds over uniform panels; the panel touching
    // s = 1 carries the singularity inside its Gauss-Jacobi weight.
    const int panels = cfg.subdivisions;
    double integral = 0.0;
    if (panels > 1) {
        const GaussRule leg = gauss_legendre(cfg.nodes);
        for (int p = 0; p < panels - 1; ++p) {
            const double lo = double(p) / panels, hi = double(p + 1) / panels;
            const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            double acc = 0.0;
            for (int i = 0; i < cfg.nodes; ++i) {
                const double s = mid + half * leg.nodes[i];
                acc += leg.weights[i] * std::pow(1.0 - s, -a) * fprime(x * s);
            }
            integral += half * acc;
        }
    }
    const GaussRule jac = gauss_jacobi(cfg.nodes, -a, 0.0);
    const double lo = double(panels - 1) / panels;
    // s = lo + (1-lo)(1+u)/2 maps the weight to (1-u)^(-a) on [-1, 1].
    double acc = 0.0;
    for (int i = 0; i < cfg.nodes; ++i) {
        const double s = lo + (1.0 - lo) * 0.5 * (1.0 + jac.nodes[i]);
        acc += jac.weights[i] * fprime(x * s);
    }
    integral += std::pow(0.5 * (1.0 - lo), 1.0 - a) * acc;

    return std::pow(x, 1.0 - a) / gamma(1.0 - a) * integral;
}

SeriesResult derivative_series(const FunctionModel& f, double order, double x, int n_terms,
                               double tol) {
    require_positive_x(x);
    if (order > 1.0) throw std::domain_error("derivative_series requires order <= 1");
    if (order <= 0.0 && std::nearbyint(order) == order && order != 0.0)
        throw std::domain_error("derivative_series rejects negative integer orders");
    if (n_terms < 1) throw std::invalid_argument("derivative_series requires n_terms >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("derivative_series requires tol > 0");

    const Jet jet = f.jet_at(x, n_terms - 1);
    const double f0 = f.value(0.0);
    const double gam = gamma(order + 1.0);

    SeriesResult r;
    int small_streak = 0;
    for (int k = 0; k < n_terms; ++k) {
        const double dk = (k == 0) ? (jet.value() - f0) : jet.coeff(k);
        const double term = sinc_factor(order, k) * gam * std::pow(x, k - order) * dk;
        r.value += term;
        r.last_term = std::fabs(term);
        r.terms_used = k + 1;
        small_streak = (r.last_term <= tol * std::fabs(r.value)) ? small_streak + 1 : 0;
        if (small_streak >= 2) {
            r.converged = true;
            break;
        }
    }
    return r;
}

SeriesResult caputo_series(const FunctionModel& f, FractionalOrder alpha, double x, int n_terms,
                           double tol) {
    require_positive_x(x);
    if (alpha.is_zero()) return {f.value(x) - f.value(0.0), 1, 0.0, true};
    if (alpha.is_one()) return {f.derivative(x, 1), 1, 0.0, true};
    return derivative_series(f, alpha.value(), x, n_terms, tol);
}

}  // namespace caputo
