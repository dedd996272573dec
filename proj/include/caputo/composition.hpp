// Fractional product and chain rules for composite functions, the exact
// k-th derivative machinery they lean on, and the tanh evaluation built from
// the product rule with sinh closed forms.
#pragma once

#include <functional>

#include "caputo/derivative.hpp"
#include "caputo/function_model.hpp"
#include "caputo/types.hpp"

namespace caputo {

// Supplies D^(alpha - l) of the first factor at x, for the same alpha passed
// to product_rule (e.g. bind caputo_sinh_shifted for f = sinh).
using ShiftedDerivativeMap = std::function<double(int l, double x)>;

// Fractional product rule
//   sum_{l < L} C(alpha, l) g^(l)(x) D^(alpha-l)[f](x),
// fractional orders on f, plain derivatives on g. The sum reproduces the
// Caputo derivative of f * g exactly when f(0) = 0; for f(0) != 0 it equals
// D^alpha[f g] - f(0) D^alpha[g], the origin-shift convention applied to f.
// Without a closed_form map the shifted derivatives come from the series
// expansion of order alpha - l truncated at plan.inner terms. Integer alpha
// dispatches to the classical results: f g - value at 0, (f g)'.
SeriesResult product_rule(const FunctionModel& f, const FunctionModel& g, FractionalOrder alpha,
                          double x, const TruncationPlan& plan = {},
                          const ShiftedDerivativeMap& closed_form = {});

// k-th derivative of f(g(x)) through the binomial double sum
//   sum_{m<=k} (1/m!) [ sum_{j<=m} (-1)^j C(m,j) g^j d^k/dx^k g^(m-j) ]
//     f^(m)(g(x)),
// evaluated term by term with jet-powered derivatives of g^(m-j).
double di_bruno_kth(const FunctionModel& f, const FunctionModel& g, int k, double x);

// n-th derivative of 1 / f(x) through
//   (n+1) sum_{k<=n} C(n,k) (-1)^k / (k+1) f^-(k+1) d^n/dx^n f^k.
double inverse_derivative(const FunctionModel& f, int n, double x);

// Weight W_m of the fractional chain rule: the normal-ordered operator
// series applied to the m-th derivative of g^(m-j), truncated at
// inner_terms + 1 operator terms. W_0 == 1 identically.
double chain_weight(const FunctionModel& g, FractionalOrder alpha, int m, double x,
                    int inner_terms);

// Fractional chain rule
//   sum_{m < L} W_m sinc_factor(alpha, m) Gamma(alpha+1)/Gamma(m+1)
//     x^(m-alpha) f^(m)(g(x)),
// with the origin shift applied to the composite: the m = 0 term uses
// f(g(x)) - f(g(0)). Integer alpha dispatches to the classical results.
SeriesResult chain_rule(const FunctionModel& f, const FunctionModel& g, FractionalOrder alpha,
                        double x, const TruncationPlan& plan = {});

// Caputo derivative of tanh(beta t): product rule over sinh(beta t) *
// sech(beta t) with the sinh shifted derivatives in closed form.
SeriesResult caputo_tanh(double beta, FractionalOrder alpha, double x, int terms = 10);

}  // namespace caputo
