// Truncated Taylor jets: coefficient arrays c[n] = f^(n)(x) / n! with exact
// arithmetic rules, elementary-function generators, and series composition.
#pragma once

#include <vector>

#include "caputo/types.hpp"

namespace caputo {

class Jet {
public:
    // coeffs[n] = f^(n)(base_point) / n!; order = coeffs.size() - 1 <= kMaxJetOrder.
    Jet(double base_point, std::vector<double> coeffs);

    static Jet constant(double base_point, double value, int order);

    int order() const noexcept { return int(c_.size()) - 1; }
    double base_point() const noexcept { return base_; }
    double value() const noexcept { return c_[0]; }
    double coeff(int n) const;
    double derivative(int n) const;  // n! * coeff(n)

    // Integer power by binary exponentiation; exponent >= 0.
    Jet pow(int exponent) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);  // Cauchy product, truncated
    friend Jet operator/(const Jet& a, const Jet& b);  // requires b.value() != 0

private:
    double base_;
    std::vector<double> c_;
};

// Elementary jets of f at x through the given order.
Jet jet_exp(double x, int order);
Jet jet_sin(double x, int order);
Jet jet_cos(double x, int order);
Jet jet_sinh(double x, int order);
Jet jet_cosh(double x, int order);
Jet jet_tanh(double x, int order);  // recurrence from t' = 1 - t^2
Jet jet_sech(double x, int order);  // 1 / cosh by jet division
Jet jet_power(double exponent, double x, int order);  // x > 0 unless exponent is a whole number
Jet jet_identity(double x, int order);
Jet jet_constant(double value, double x, int order);

// Power-series composition: f_at_g is the jet of the outer function taken at
// g.value(); the result is the jet of the composite at g.base_point().
Jet compose_jets(const Jet& f_at_g, const Jet& g);

}  // namespace caputo
