// Euler integral transform machinery: repeated integration of power-law
// hypergeometric forms as a parameter lift, the direct Cauchy repeated
// integral, and the closed forms built from them for sinh.
#pragma once

#include "caputo/function_model.hpp"
#include "caputo/special_functions.hpp"
#include "caputo/types.hpp"

namespace caputo {

// An n-fold repeated integral from 0 of the power-law series form.
struct RepeatedIntegralSpec {
    HypSeriesSpec series;
    int depth;  // n >= 0

    RepeatedIntegralSpec(HypSeriesSpec series_form, int n);
};

// Result of the lift: n-fold integration of x^kappa pFq(zeta x^m) equals
//   gamma_ratio * x^(kappa+n) * pFq(lifted params; zeta x^m),
// with gamma_ratio = Gamma(kappa+1) / Gamma(kappa+n+1) carried in log space.
struct LiftedSeries {
    HypSeriesSpec series;  // kappa advanced to kappa + n
    double log_gamma_ratio = 0.0;

    double gamma_ratio() const;
    double evaluate(double x, double tol = 1e-14, int max_terms = 500) const;
};

// Parameter lift: append upper (kappa+j)/m and lower (kappa+n+j)/m for
// j = 1..m, then cancel upper/lower pairs matching to 1e-12.
LiftedSeries eit_lift(const RepeatedIntegralSpec& spec);
LiftedSeries eit_lift(const HypSeriesSpec& series, int depth);

// (1 / Gamma(n)) * int_0^x (x-t)^(n-1) f(t) dt for n >= 1, by composite
// Gauss-Legendre over panels graded toward t = 0 (power-law behaviour of f
// at the origin is the common case). depth 0 returns f(x).
double cauchy_repeated_integral(const FunctionModel& f, int depth, double x,
                                const QuadratureConfig& cfg = {});

// Weighted-integral identity for the series: returns the right-hand side
//   Gamma(d-c) Gamma(c) / Gamma(d) * pFq(lifted with (c+j)/m, (d+j)/m; z),
// j = 0..m-1, requiring d > c > 0. With validate_tol > 0 the left-hand side
//   int_0^1 t^(c-1) (1-t)^(d-c-1) pFq(z t^m) dt
// is also integrated (Gauss-Jacobi) and disagreement beyond the tolerance
// throws.
double eit_transform_check(const HypSeriesSpec& spec, double c, double d, double z,
                           double validate_tol = 0.0, const QuadratureConfig& cfg = {});

// Closed form of the Caputo derivative of sinh(beta t) at x > 0:
//   beta x^(1-alpha) 1F2(1; (2-alpha)/2, (3-alpha)/2; beta^2 x^2 / 4)
//     / Gamma(2-alpha),
// with exact endpoint dispatch to sinh(beta x) and beta cosh(beta x).
double caputo_sinh(double beta, FractionalOrder alpha, double x);

// The order-(alpha - l) derivative of sinh(beta t): the above lifted l times,
//   beta x^(1-alpha+l) 1F2(1; (2+l-alpha)/2, (3+l-alpha)/2; beta^2 x^2 / 4)
//     / Gamma(2+l-alpha).
double caputo_sinh_shifted(double beta, FractionalOrder alpha, int l, double x);

}  // namespace caputo
