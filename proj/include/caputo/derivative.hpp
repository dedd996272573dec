// Caputo fractional derivative of order alpha in [0, 1] at x > 0, by two
// independent routes: the defining singular integral (weighted Gauss
// quadrature) and the integer-derivative series expansion.
#pragma once

#include "caputo/function_model.hpp"
#include "caputo/types.hpp"

namespace caputo {

// (1 / Gamma(1-alpha)) * int_0^x (x-t)^(-alpha) f'(t) dt. After t = x s the
// endpoint factor (1-s)^(-alpha) is absorbed exactly by a Gauss-Jacobi rule
// on the final panel; earlier panels use Gauss-Legendre. Exact dispatch at
// the endpoints: alpha = 0 gives f(x) - f(0), alpha = 1 gives f'(x).
double caputo_quadrature(const FunctionModel& f, FractionalOrder alpha, double x,
                         const QuadratureConfig& cfg = {});

// Truncated expansion over integer derivatives,
//   sum_k sinc_factor(alpha, k) * Gamma(alpha+1)/Gamma(k+1) * x^(k-alpha)
//         * d^k/dx^k [f(x) - f(0)],
// where only the k = 0 term feels the origin shift. Non-convergence within
// n_terms is reported through the result, never thrown.
SeriesResult caputo_series(const FunctionModel& f, FractionalOrder alpha, double x,
                           int n_terms = 10, double tol = 1e-14);

// The same expansion at an arbitrary real order <= 1. Negative orders give
// the series form of repeated integration; negative integer orders are
// rejected (every term degenerates to 0 * inf there).
SeriesResult derivative_series(const FunctionModel& f, double order, double x,
                               int n_terms = 10, double tol = 1e-14);

}  // namespace caputo
