#include "caputo/eit.hpp"

#include <cmath>
#include <string>

#include "caputo/quadrature.hpp"

namespace caputo {

namespace {

constexpr double kParamMatchTol = 1e-12;

// Remove upper/lower parameter pairs equal to within the match tolerance;
// an equal pair contributes identical Pochhammer factors and cancels exactly.
void cancel_parameter_pairs(std::vector<double>& upper, std::vector<double>& lower) {
    for (size_t i = 0; i < upper.size();) {
        bool cancelled = false;
        for (size_t j = 0; j < lower.size(); ++j) {
            if (std::fabs(upper[i] - lower[j]) <= kParamMatchTol) {
                upper.erase(upper.begin() + i);
                lower.erase(lower.begin() + j);
                cancelled = true;
                break;
            }
        }
        if (!cancelled) ++i;
    }
}

}  // namespace

RepeatedIntegralSpec::RepeatedIntegralSpec(HypSeriesSpec series_form, int n)
    : series(std::move(series_form)), depth(n) {
    if (depth < 0) throw std::invalid_argument("repeated integral depth must be >= 0");
    if (!(series.kappa > -1.0))
        throw std::domain_error("repeated integral requires kappa > -1");
}

double LiftedSeries::gamma_ratio() const { return std::exp(log_gamma_ratio); }

double LiftedSeries::evaluate(double x, double tol, int max_terms) const {
    return evaluate_power_law(series, x, gamma_ratio(), tol, max_terms);
}

LiftedSeries eit_lift(const RepeatedIntegralSpec& spec) {
    const HypSeriesSpec& s = spec.series;
    const int n = spec.depth;
    if (n == 0) return {s, 0.0};

    std::vector<double> upper = s.upper;
    std::vector<double> lower = s.lower;
    for (int j = 1; j <= s.m; ++j) {
        upper.push_back((s.kappa + j) / s.m);
        lower.push_back((s.kappa + n + j) / s.m);
    }
    cancel_parameter_pairs(upper, lower);

    LiftedSeries lifted{HypSeriesSpec(std::move(upper), std::move(lower), s.kappa + n, s.zeta, s.m),
                        log_gamma(s.kappa + 1.0) - log_gamma(s.kappa + n + 1.0)};
    return lifted;
}

LiftedSeries eit_lift(const HypSeriesSpec& series, int depth) {
    return eit_lift(RepeatedIntegralSpec(series, depth));
}

double cauchy_repeated_integral(const FunctionModel& f, int depth, double x,
                                const QuadratureConfig& cfg) {
    if (depth < 0) throw std::invalid_argument("repeated integral depth must be >= 0");
    if (!(x > 0.0)) throw std::domain_error("repeated integral requires x > 0");
    cfg.validate();
    if (depth == 0) return f.value(x);

    const GaussRule leg = gauss_legendre(cfg.nodes);
    // Panels geometrically graded toward t = 0 (ratio 3), where power-law
    // integrands lose smoothness.
    double integral = 0.0;
    double hi = x;
    for (int p = 0; p < cfg.subdivisions; ++p) {
        const bool last = (p == cfg.subdivisions - 1);
        const double lo = last ? 0.0 : hi / 3.0;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int i = 0; i < cfg.nodes; ++i) {
            const double t = mid + half * leg.nodes[i];
            acc += leg.weights[i] * std::pow(x - t, depth - 1) * f.value(t);
        }
        integral += half * acc;
        hi = lo;
    }
    return integral / gamma(double(depth));
}

double eit_transform_check(const HypSeriesSpec& spec, double c, double d, double z,
                           double validate_tol, const QuadratureConfig& cfg) {
    if (!(c > 0.0) || !(d > c))
        throw std::domain_error("eit_transform_check requires d > c > 0");

    std::vector<double> upper = spec.upper;
    std::vector<double> lower = spec.lower;
    for (int j = 0; j < spec.m; ++j) {
        upper.push_back((c + j) / spec.m);
        lower.push_back((d + j) / spec.m);
    }
    cancel_parameter_pairs(upper, lower);
    const double rhs = std::exp(log_gamma(d - c) + log_gamma(c) - log_gamma(d)) *
                       phyperg(upper, lower, z).value;

    if (validate_tol > 0.0) {
        cfg.validate();
        // t = (1+u)/2 turns the weight into the Jacobi pair (d-c-1, c-1).
        const GaussRule jac = gauss_jacobi(cfg.nodes, d - c - 1.0, c - 1.0);
        double acc = 0.0;
        for (int i = 0; i < cfg.nodes; ++i) {
            const double t = 0.5 * (1.0 + jac.nodes[i]);
            acc += jac.weights[i] * phyperg(spec, z * std::pow(t, spec.m)).value;
        }
        const double lhs = std::pow(2.0, 1.0 - d) * acc;
        if (std::fabs(lhs - rhs) > validate_tol * std::max(1.0, std::fabs(rhs)))
            throw std::runtime_error("integral transform identity check failed: lhs = " +
                                     std::to_string(lhs) + ", rhs = " + std::to_string(rhs));
    }
    return rhs;
}

double caputo_sinh(double beta, FractionalOrder alpha, double x) {
    if (!(x > 0.0)) throw std::domain_error("caputo_sinh requires x > 0");
    if (alpha.is_zero()) return std::sinh(beta * x);
    if (alpha.is_one()) return beta * std::cosh(beta * x);
    const double a = alpha.value();
    const double z = 0.25 * beta * beta * x * x;
    return beta * std::pow(x, 1.0 - a) *
           phyperg({1.0}, {0.5 * (2.0 - a), 0.5 * (3.0 - a)}, z).value / gamma(2.0 - a);
}

double caputo_sinh_shifted(double beta, FractionalOrder alpha, int l, double x) {
    if (l < 0) throw std::invalid_argument("caputo_sinh_shifted requires l >= 0");
    if (l == 0) return caputo_sinh(beta, alpha, x);
    if (!(x > 0.0)) throw std::domain_error("caputo_sinh_shifted requires x > 0");
    const double a = alpha.value();
    const double z = 0.25 * beta * beta * x * x;
    return beta * std::pow(x, 1.0 - a + l) *
           phyperg({1.0}, {0.5 * (2.0 + l - a), 0.5 * (3.0 + l - a)}, z).value /
           gamma(2.0 + l - a);
}

}  // namespace caputo
