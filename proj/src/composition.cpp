#include "caputo/composition.hpp"

#include <cmath>
#include <string>

#include "caputo/eit.hpp"
#include "caputo/special_functions.hpp"

namespace caputo {

namespace {

void require_positive_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("composition rules require x > 0");
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Accumulates a truncated sum with the shared two-quiet-terms stopping rule.
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(double tol) : tol_(tol) {}

    // Returns true once the stopping rule has fired.
    bool add(double term) {
        r_.value += term;
        r_.last_term = std::fabs(term);
        ++r_.terms_used;
        streak_ = (r_.last_term <= tol_ * std::fabs(r_.value)) ? streak_ + 1 : 0;
        if (streak_ >= 2) r_.converged = true;
        return r_.converged;
    }

    SeriesResult result() const { return r_; }

private:
    double tol_;
    int streak_ = 0;
    SeriesResult r_;
};

// W_m from a jet of g of order >= inner_terms + m.
double weight_from_jet(const Jet& g_jet, double alpha, int m, double x, int inner_terms) {
    const double g0 = g_jet.value();
    const double inv_mfact = 1.0 / factorial(m);
    double w = 0.0;
    for (int j = 0; j <= m; ++j) {
        const Jet h = g_jet.pow(m - j);
        // Operator series sum_k c_k (-x)^k d^(k+m), with
        // c_k = (m-alpha)_k / [(1+m)_k (1+m-alpha)_k].
        double ck = 1.0;
        double xk = 1.0;
        double inner = 0.0;
        for (int k = 0; k <= inner_terms; ++k) {
            inner += ck * xk * h.derivative(k + m);
            ck *= (m - alpha + k) / ((1.0 + m + k) * (1.0 + m - alpha + k));
            xk *= -x;
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        w += sign * inv_mfact * binomial(m, j) * std::pow(g0, j) * inner;
    }
    return w;
}

}  // namespace

SeriesResult product_rule(const FunctionModel& f, const FunctionModel& g, FractionalOrder alpha,
                          double x, const TruncationPlan& plan,
                          const ShiftedDerivativeMap& closed_form) {
    require_positive_x(x);
    plan.validate();
    if (alpha.is_zero()) return {f.value(x) * g.value(x) - f.value(0.0) * g.value(0.0), 1, 0.0, true};
    if (alpha.is_one()) {
        const Jet jf = f.jet_at(x, 1), jg = g.jet_at(x, 1);
        return {jf.derivative(1) * jg.value() + jf.value() * jg.derivative(1), 1, 0.0, true};
    }

    const double a = alpha.value();
    const int outer = plan.outer_terms;
    const int inner = plan.resolved_inner();
    const Jet g_jet = g.jet_at(x, outer - 1);

    SeriesAccumulator acc(plan.tol);
    for (int l = 0; l < outer; ++l) {
        const double shifted = closed_form
                                   ? closed_form(l, x)
                                   : derivative_series(f, a - l, x, inner, plan.tol).value;
        if (acc.add(gen_binomial(a, l) * g_jet.derivative(l) * shifted)) break;
    }
    return acc.result();
}

double di_bruno_kth(const FunctionModel& f, const FunctionModel& g, int k, double x) {
    if (k < 0) throw std::invalid_argument("di_bruno_kth requires k >= 0");
    const Jet g_jet = g.jet_at(x, k);
    const Jet f_jet = f.jet_at(g_jet.value(), k);
    const double g0 = g_jet.value();

    double total = 0.0;
    for (int m = 0; m <= k; ++m) {
        double bracket = 0.0;
        for (int j = 0; j <= m; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            bracket += sign * binomial(m, j) * std::pow(g0, j) * g_jet.pow(m - j).derivative(k);
        }
        total += bracket / factorial(m) * f_jet.derivative(m);
    }
    return total;
}

double inverse_derivative(const FunctionModel& f, int n, double x) {
    if (n < 0) throw std::invalid_argument("inverse_derivative requires n >= 0");
    const Jet f_jet = f.jet_at(x, n);
    const double f0 = f_jet.value();
    if (f0 == 0.0) throw std::domain_error("inverse_derivative at a zero of f");

    double total = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        total += binomial(n, k) * sign / (k + 1.0) * std::pow(f0, -(k + 1.0)) *
                 f_jet.pow(k).derivative(n);
    }
    return (n + 1.0) * total;
}

double chain_weight(const FunctionModel& g, FractionalOrder alpha, int m, double x,
                    int inner_terms) {
    require_positive_x(x);
    if (m < 0) throw std::invalid_argument("chain_weight requires m >= 0");
    if (inner_terms < 1) throw std::invalid_argument("chain_weight requires inner_terms >= 1");
    if (inner_terms + m > kMaxJetOrder)
        throw std::length_error("chain_weight would need a jet above order " +
                                std::to_string(kMaxJetOrder));
    return weight_from_jet(g.jet_at(x, inner_terms + m), alpha.value(), m, x, inner_terms);
}

SeriesResult chain_rule(const FunctionModel& f, const FunctionModel& g, FractionalOrder alpha,
                        double x, const TruncationPlan& plan) {
    require_positive_x(x);
    plan.validate();
    const double gx = g.value(x);
    if (alpha.is_zero()) return {f.value(gx) - f.value(g.value(0.0)), 1, 0.0, true};
    if (alpha.is_one()) {
        const Jet jg = g.jet_at(x, 1);
        return {f.jet_at(gx, 1).derivative(1) * jg.derivative(1), 1, 0.0, true};
    }

    const double a = alpha.value();
    const int outer = plan.outer_terms;
    const int inner = plan.resolved_inner();
    if (inner + outer - 1 > kMaxJetOrder)
        throw std::length_error("chain_rule truncation would need a jet above order " +
                                std::to_string(kMaxJetOrder));

    const Jet g_jet = g.jet_at(x, inner + outer - 1);
    const Jet f_jet = f.jet_at(gx, outer - 1);
    const double gam = gamma(a + 1.0);

    SeriesAccumulator acc(plan.tol);
    for (int m = 0; m < outer; ++m) {
        const double w = weight_from_jet(g_jet, a, m, x, inner);
        const double fm = (m == 0) ? (f_jet.value() - f.value(g.value(0.0)))
                                   : f_jet.derivative(m);
        const double term =
            w * sinc_factor(a, m) * gam / factorial(m) * std::pow(x, m - a) * fm;
        if (acc.add(term)) break;
    }
    return acc.result();
}

SeriesResult caputo_tanh(double beta, FractionalOrder alpha, double x, int terms) {
    require_positive_x(x);
    if (terms < 1) throw std::invalid_argument("caputo_tanh requires terms >= 1");
    if (alpha.is_zero()) return {std::tanh(beta * x), 1, 0.0, true};
    if (alpha.is_one()) {
        const double s = 1.0 / std::cosh(beta * x);
        return {beta * s * s, 1, 0.0, true};
    }
    const FunctionModel f = make_function("sinh", beta);
    const FunctionModel g = make_function("sech", beta);
    TruncationPlan plan;
    plan.outer_terms = terms;
    return product_rule(f, g, alpha, x, plan,
                        [beta, alpha](int l, double xx) {
                            return caputo_sinh_shifted(beta, alpha, l, xx);
                        });
}

}  // namespace caputo
