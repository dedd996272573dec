// Gauss quadrature rules on [-1, 1]: Gauss-Jacobi for weights
// (1-x)^a (1+x)^b with a, b > -1, and Gauss-Legendre as the a = b = 0 case.
#pragma once

#include <vector>

namespace caputo {

struct GaussRule {
    std::vector<double> nodes;    // interior points of [-1, 1]
    std::vector<double> weights;  // strictly positive
};

// n-point Gauss-Jacobi rule (n >= 4): sum_i w_i f(x_i) integrates
// (1-x)^a (1+x)^b f(x) over [-1, 1] exactly for polynomials of degree
// <= 2n - 1. Nodes by Newton iteration on the Jacobi recurrence.
GaussRule gauss_jacobi(int n, double a, double b);

GaussRule gauss_legendre(int n);

}  // namespace caputo
