// Scalar special-function kernel: Gamma, generalized binomial coefficients,
// the spherical sinc factor, and generalized hypergeometric series pFq.
#pragma once

#include <vector>

#include "caputo/types.hpp"

namespace caputo {

// sin(pi * x) with exact handling of integer x (returns 0) and argument
// reduction that stays accurate for large |x|.
double sin_pi(double x);

// Gamma(x) for real x, poles (x a non-positive integer) rejected with a
// domain_error. Relative accuracy ~1e-14 over |x| <= 50.
double gamma(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Gamma(a) / Gamma(b) for a, b > 0, evaluated in log space so large
// arguments cannot overflow on the way to a representable ratio.
double gamma_ratio(double a, double b);

// Integer binomial coefficient as a double; 0 outside 0 <= k <= n.
double binomial(int n, int k);

// Generalized binomial coefficient Gamma(a+1) / (Gamma(a-l+1) Gamma(l+1)),
// computed as the product prod_{j<l} (a-j)/(j+1). The product form has no
// poles and yields an exact 0 once a factor (a-j) vanishes at integer a.
double gen_binomial(double alpha, int l);

// sin(pi(a-k)) / (pi(a-k)). Exactly 1 at a == k, exactly 0 at other integer
// gaps, guarded series below |a-k| = 1e-8.
double sinc_factor(double alpha, int k);

// Parameter set for a power-law hypergeometric form
//   x^kappa * pFq(upper; lower; zeta * x^m).
// upper/lower are the series parameters; kappa, zeta, m describe the
// prefactor and argument. Lower parameters must avoid the poles (zero or
// negative integers) and #upper <= #lower keeps the series entire.
struct HypSeriesSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double kappa = 0.0;
    double zeta = 1.0;
    int m = 1;

    HypSeriesSpec(std::vector<double> upper_params, std::vector<double> lower_params,
                  double kappa_exponent = 0.0, double zeta_scale = 1.0, int m_power = 1);
};

// pFq(upper; lower; z) by term recurrence
//   t_{k+1} = t_k * prod(upper_i + k) / prod(lower_j + k) * z / (k + 1),
// stopping once two consecutive terms drop below tol * |sum|. Throws a
// runtime_error if max_terms is exhausted first.
SeriesResult phyperg(const std::vector<double>& upper, const std::vector<double>& lower,
                     double z, double tol = 1e-14, int max_terms = 500);

// Same series with the parameters taken from a spec (prefactor fields ignored).
SeriesResult phyperg(const HypSeriesSpec& spec, double z, double tol = 1e-14,
                     int max_terms = 500);

// Full power-law form scale * x^kappa * pFq(zeta * x^m) at x >= 0.
double evaluate_power_law(const HypSeriesSpec& spec, double x, double scale = 1.0,
                          double tol = 1e-14, int max_terms = 500);

}  // namespace caputo
