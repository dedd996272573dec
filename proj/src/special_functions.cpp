#include "caputo/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace caputo {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_integral(double x) { return std::nearbyint(x) == x; }

// Lanczos g = 7, 9-term coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos sum A(x) for x >= 0.5.
double lanczos_sum(double x) {
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    return a;
}

double gamma_positive(double x) {
    // Recurrence below 0.5 keeps the series argument in its sweet spot.
    if (x < 0.5) return gamma_positive(x + 1.0) / x;
    const double t = x + 6.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

}  // namespace

double sin_pi(double x) {
    // sin(pi(k + r)) = (-1)^k sin(pi r); the reduction r = x - k is exact in
    // floating point, so no accuracy is lost for large |x|.
    if (is_integral(x)) return 0.0;
    const double k = std::nearbyint(x);
    const double r = x - k;
    const double s = std::sin(kPi * r);
    return (std::fmod(k, 2.0) == 0.0) ? s : -s;
}

double gamma(double x) {
    if (x <= 0.0 && is_integral(x))
        throw std::domain_error("gamma pole at non-positive integer " + std::to_string(x));
    if (x >= 0.5) return gamma_positive(x);
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double t = x + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / i;
    return r;
}

double gen_binomial(double alpha, int l) {
    if (l < 0) throw std::invalid_argument("gen_binomial requires l >= 0");
    double r = 1.0;
    for (int j = 0; j < l; ++j) r *= (alpha - j) / (j + 1);
    return r;
}

double sinc_factor(double alpha, int k) {
    const double d = alpha - k;
    if (is_integral(d)) return d == 0.0 ? 1.0 : 0.0;
    if (std::fabs(d) < 1e-8) {
        const double u = kPi * d;
        return 1.0 - u * u / 6.0 * (1.0 - u * u / 20.0);
    }
    return sin_pi(d) / (kPi * d);
}

HypSeriesSpec::HypSeriesSpec(std::vector<double> upper_params, std::vector<double> lower_params,
                             double kappa_exponent, double zeta_scale, int m_power)
    : upper(std::move(upper_params)),
      lower(std::move(lower_params)),
      kappa(kappa_exponent),
      zeta(zeta_scale),
      m(m_power) {
    if (upper.size() > lower.size())
        throw std::invalid_argument("series spec requires #upper <= #lower");
    for (double b : lower)
        if (b <= 0.0 && std::nearbyint(b) == b)
            throw std::invalid_argument("series spec has a lower parameter at a pole: " +
                                        std::to_string(b));
    if (m < 1) throw std::invalid_argument("series spec requires argument power m >= 1");
}

SeriesResult phyperg(const std::vector<double>& upper, const std::vector<double>& lower,
                     double z, double tol, int max_terms) {
    if (upper.size() > lower.size())
        throw std::invalid_argument("phyperg requires #upper <= #lower");
    for (double b : lower)
        if (b <= 0.0 && std::nearbyint(b) == b)
            throw std::invalid_argument("phyperg lower parameter at a pole: " + std::to_string(b));
    if (!(tol > 0.0)) throw std::invalid_argument("phyperg requires tol > 0");

    SeriesResult r;
    double term = 1.0;
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        r.value += term;
        r.last_term = std::fabs(term);
        r.terms_used = k + 1;
        small_streak = (r.last_term <= tol * std::fabs(r.value)) ? small_streak + 1 : 0;
        if (small_streak >= 2) {
            r.converged = true;
            return r;
        }
        double ratio = z / (k + 1.0);
        for (double a : upper) ratio *= a + k;
        for (double b : lower) ratio /= b + k;
        term *= ratio;
    }
    throw std::runtime_error("phyperg did not converge within " + std::to_string(max_terms) +
                             " terms (z = " + std::to_string(z) + ")");
}

SeriesResult phyperg(const HypSeriesSpec& spec, double z, double tol, int max_terms) {
    return phyperg(spec.upper, spec.lower, z, tol, max_terms);
}

double evaluate_power_law(const HypSeriesSpec& spec, double x, double scale, double tol,
                          int max_terms) {
    if (x < 0.0 || (x == 0.0 && spec.kappa < 0.0))
        throw std::domain_error("evaluate_power_law requires x > 0 (x >= 0 when kappa >= 0)");
    if (x == 0.0) return spec.kappa == 0.0 ? scale : 0.0;
    const double z = spec.zeta * std::pow(x, spec.m);
    return scale * std::pow(x, spec.kappa) * phyperg(spec, z, tol, max_terms).value;
}

}  // namespace caputo
