#include "caputo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "caputo/special_functions.hpp"

namespace caputo {

GaussRule gauss_jacobi(int n, double a, double b) {
    if (n < 4) throw std::invalid_argument("gauss_jacobi requires n >= 4");
    if (!(a > -1.0) || !(b > -1.0))
        throw std::invalid_argument("gauss_jacobi requires exponents > -1");

    constexpr int kMaxIter = 40;
    constexpr double kEps = 1e-15;
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double ab = a + b;
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // Initial guesses: asymptotic root locations, then extrapolation from
        // the roots already found (largest root first).
        if (i == 0) {
            const double an = a / n, bn = b / n;
            const double r1 = (1.0 + a) * (2.78 / (4.0 + n * n) + 0.768 * an / n);
            const double r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
            z = 1.0 - r1 / r2;
        } else if (i == 1) {
            const double r1 = (4.1 + a) / ((1.0 + a) * (1.0 + 0.156 * a));
            const double r2 = 1.0 + 0.06 * (n - 8.0) * (1.0 + 0.12 * a) / n;
            const double r3 = 1.0 + 0.012 * b * (1.0 + 0.25 * std::fabs(a)) / n;
            z -= (1.0 - z) * r1 * r2 * r3;
        } else if (i == 2) {
            const double r1 = (1.67 + 0.28 * a) / (1.0 + 0.37 * a);
            const double r2 = 1.0 + 0.22 * (n - 8.0) / n;
            const double r3 = 1.0 + 8.0 * b / ((6.28 + b) * n * n);
            z -= (rule.nodes[0] - z) * r1 * r2 * r3;
        } else if (i == n - 2) {
            const double r1 = (1.0 + 0.235 * b) / (0.766 + 0.119 * b);
            const double r2 = 1.0 / (1.0 + 0.639 * (n - 4.0) / (1.0 + 0.71 * (n - 4.0)));
            const double r3 = 1.0 / (1.0 + 20.0 * a / ((7.5 + a) * n * n));
            z += (z - rule.nodes[n - 4]) * r1 * r2 * r3;
        } else if (i == n - 1) {
            const double r1 = (1.0 + 0.37 * b) / (1.67 + 0.28 * b);
            const double r2 = 1.0 / (1.0 + 0.22 * (n - 8.0) / n);
            const double r3 = 1.0 / (1.0 + 8.0 * a / ((6.28 + a) * n * n));
            z += (z - rule.nodes[n - 3]) * r1 * r2 * r3;
        } else {
            z = 3.0 * rule.nodes[i - 1] - 3.0 * rule.nodes[i - 2] + rule.nodes[i - 3];
        }

        double p1 = 0.0, p2 = 0.0, pp = 0.0, temp = 0.0;
        bool settled = false;
        for (int it = 0; it < kMaxIter; ++it) {
            // Three-term recurrence for the Jacobi polynomial P_n^(a,b)(z).
            temp = 2.0 + ab;
            p1 = (a - b + temp * z) / 2.0;
            p2 = 1.0;
            for (int j = 2; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                temp = 2.0 * j + ab;
                const double c1 = 2.0 * j * (j + ab) * (temp - 2.0);
                const double c2 = (temp - 1.0) * (a * a - b * b + temp * (temp - 2.0) * z);
                const double c3 = 2.0 * (j - 1 + a) * (j - 1 + b) * temp;
                p1 = (c2 * p2 - c3 * p3) / c1;
            }
            pp = (n * (a - b - temp * z) * p1 + 2.0 * (n + a) * (n + b) * p2) /
                 (temp * (1.0 - z * z));
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= kEps) {
                settled = true;
                break;
            }
        }
        if (!settled) throw std::runtime_error("gauss_jacobi node iteration failed to settle");

        rule.nodes[i] = z;
        rule.weights[i] = std::exp(log_gamma(a + n) + log_gamma(b + n) - log_gamma(n + 1.0) -
                                   log_gamma(n + ab + 1.0)) *
                          temp * std::pow(2.0, ab) / (pp * p2);
    }
    return rule;
}

GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace caputo
