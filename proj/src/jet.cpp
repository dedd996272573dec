#include "caputo/jet.hpp"

#include <cmath>
#include <string>

#include "caputo/special_functions.hpp"

namespace caputo {

namespace {

void check_same_frame(const Jet& a, const Jet& b) {
    if (a.base_point() != b.base_point())
        throw std::invalid_argument("jet arithmetic requires a common base point");
    if (a.order() != b.order())
        throw std::invalid_argument("jet arithmetic requires matching orders");
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

Jet::Jet(double base_point, std::vector<double> coeffs) : base_(base_point), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("jet needs at least the order-0 coefficient");
    if (int(c_.size()) - 1 > kMaxJetOrder)
        throw std::length_error("jet order above the maximum of " + std::to_string(kMaxJetOrder));
}

Jet Jet::constant(double base_point, double value, int order) {
    std::vector<double> c(order + 1, 0.0);
    c[0] = value;
    return Jet(base_point, std::move(c));
}

double Jet::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("jet coefficient index out of range");
    return c_[n];
}

double Jet::derivative(int n) const { return factorial(n) * coeff(n); }

Jet Jet::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("jet pow requires exponent >= 0");
    Jet result = Jet::constant(base_, 1.0, order());
    Jet square = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * square;
        e >>= 1;
        if (e > 0) square = square * square;
    }
    return result;
}

Jet operator+(const Jet& a, const Jet& b) {
    check_same_frame(a, b);
    std::vector<double> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Jet(a.base_, std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
    check_same_frame(a, b);
    std::vector<double> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return Jet(a.base_, std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
    check_same_frame(a, b);
    const int n = a.order();
    std::vector<double> c(n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Jet(a.base_, std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
    check_same_frame(a, b);
    if (b.value() == 0.0) throw std::domain_error("jet division by a zero-valued jet");
    const int n = a.order();
    std::vector<double> q(n + 1, 0.0);
    // q = a/b solved coefficient by coefficient from a = b*q.
    for (int i = 0; i <= n; ++i) {
        double s = a.c_[i];
        for (int j = 1; j <= i; ++j) s -= b.c_[j] * q[i - j];
        q[i] = s / b.c_[0];
    }
    return Jet(a.base_, std::move(q));
}

namespace {

void check_order(int order) {
    if (order < 0) throw std::invalid_argument("jet order must be >= 0");
    if (order > kMaxJetOrder)
        throw std::length_error("jet order above the maximum of " + std::to_string(kMaxJetOrder));
}

// Pair recurrence for (sinh, cosh) or, with sign = -1, (sin, cos).
Jet pair_recurrence(double f0, double g0, double sign, double x, int order, bool want_first) {
    std::vector<double> f(order + 1), g(order + 1);
    f[0] = f0;
    g[0] = g0;
    for (int n = 0; n < order; ++n) {
        f[n + 1] = g[n] / (n + 1);
        g[n + 1] = sign * f[n] / (n + 1);
    }
    return Jet(x, want_first ? std::move(f) : std::move(g));
}

}  // namespace

Jet jet_exp(double x, int order) {
    check_order(order);
    std::vector<double> c(order + 1);
    c[0] = std::exp(x);
    for (int n = 0; n < order; ++n) c[n + 1] = c[n] / (n + 1);
    return Jet(x, std::move(c));
}

Jet jet_sinh(double x, int order) {
    check_order(order);
    return pair_recurrence(std::sinh(x), std::cosh(x), 1.0, x, order, true);
}

Jet jet_cosh(double x, int order) {
    check_order(order);
    return pair_recurrence(std::cosh(x), std::sinh(x), 1.0, x, order, true);
}

Jet jet_sin(double x, int order) {
    check_order(order);
    return pair_recurrence(std::sin(x), std::cos(x), -1.0, x, order, true);
}

Jet jet_cos(double x, int order) {
    check_order(order);
    return pair_recurrence(std::cos(x), -std::sin(x), -1.0, x, order, true);
}

Jet jet_tanh(double x, int order) {
    check_order(order);
    // t' = 1 - t^2 termwise: (n+1) t_{n+1} = [1 - t^2]_n.
    std::vector<double> t(order + 1);
    t[0] = std::tanh(x);
    for (int n = 0; n < order; ++n) {
        double s = (n == 0) ? 1.0 : 0.0;
        for (int i = 0; i <= n; ++i) s -= t[i] * t[n - i];
        t[n + 1] = s / (n + 1);
    }
    return Jet(x, std::move(t));
}

Jet jet_sech(double x, int order) {
    check_order(order);
    return jet_constant(1.0, x, order) / jet_cosh(x, order);
}

Jet jet_power(double exponent, double x, int order) {
    check_order(order);
    std::vector<double> c(order + 1, 0.0);
    if (std::nearbyint(exponent) == exponent && exponent >= 0.0) {
        // Whole-number power: binomial expansion, valid for any x.
        const int p = int(exponent);
        for (int n = 0; n <= order && n <= p; ++n) {
            double xp = 1.0;
            for (int i = 0; i < p - n; ++i) xp *= x;
            c[n] = binomial(p, n) * xp;
        }
        return Jet(x, std::move(c));
    }
    if (x <= 0.0)
        throw std::domain_error("jet_power requires x > 0 for a non-integer exponent");
    c[0] = std::pow(x, exponent);
    for (int n = 0; n < order; ++n) c[n + 1] = c[n] * (exponent - n) / ((n + 1) * x);
    return Jet(x, std::move(c));
}

Jet jet_identity(double x, int order) {
    check_order(order);
    std::vector<double> c(order + 1, 0.0);
    c[0] = x;
    if (order >= 1) c[1] = 1.0;
    return Jet(x, std::move(c));
}

Jet jet_constant(double value, double x, int order) {
    check_order(order);
    return Jet::constant(x, value, order);
}

Jet compose_jets(const Jet& f_at_g, const Jet& g) {
    if (f_at_g.order() != g.order())
        throw std::invalid_argument("compose_jets requires matching orders");
    if (f_at_g.base_point() != g.value())
        throw std::invalid_argument("compose_jets requires the outer jet at the inner value");
    const int n = g.order();
    // Horner scheme in the fluctuation of g (constant term removed).
    std::vector<double> fluct(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) fluct[i] = g.coeff(i);
    Jet gt(g.base_point(), std::move(fluct));
    Jet r = Jet::constant(g.base_point(), f_at_g.coeff(n), n);
    for (int i = n - 1; i >= 0; --i)
        r = r * gt + Jet::constant(g.base_point(), f_at_g.coeff(i), n);
    return r;
}

}  // namespace caputo
