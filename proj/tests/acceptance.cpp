// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit status is the
// number of failed criteria. Tolerances are pinned here and nowhere else.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "caputo/composition.hpp"
#include "caputo/derivative.hpp"
#include "caputo/eit.hpp"
#include "caputo/function_model.hpp"

using namespace caputo;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& what, double worst, double limit) {
    if (!pass) ++g_failures;
    std::printf("[%s] %d/9 %s (worst %.3e, limit %.1e)\n", pass ? "PASS" : "FAIL", index,
                what.c_str(), worst, limit);
}

double rel_err(double got, double want) {
    const double scale = std::max(1e-300, std::fabs(want));
    return std::fabs(got - want) / scale;
}

void criterion_closed_form_vs_quadrature() {
    const double limit = 1e-9;
    double worst = 0.0;
    const FunctionModel sinh_model = make_function("sinh");
    for (double a : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        for (double x : {0.25, 0.5, 1.0, 2.0, 3.0}) {
            const double closed = caputo_sinh(1.0, a, x);
            const double quad = caputo_quadrature(sinh_model, a, x);
            worst = std::max(worst, rel_err(closed, quad));
        }
    }
    report(1, worst <= limit, "sinh closed form vs singular-integral quadrature, 25 points",
           worst, limit);
}

void criterion_lift_vs_repeated_integral() {
    const double limit = 1e-8;
    double worst = 0.0;
    QuadratureConfig cfg;
    cfg.nodes = 40;
    cfg.subdivisions = 12;
    for (int m : {1, 2}) {
        const std::vector<double> lower =
            (m == 1) ? std::vector<double>{1.5} : std::vector<double>{1.25, 1.75};
        for (double kappa : {0.0, 0.5}) {
            const HypSeriesSpec base({1.0}, lower, kappa, 0.4, m);
            const FunctionModel f = from_power_series(base);
            for (int n : {1, 2, 3}) {
                for (double x : {0.5, 1.0}) {
                    const double closed = eit_lift(base, n).evaluate(x);
                    const double direct = cauchy_repeated_integral(f, n, x, cfg);
                    worst = std::max(worst, rel_err(closed, direct));
                }
            }
        }
    }
    report(2, worst <= limit,
           "parameter-lifted repeated integrals vs direct quadrature, 24 configs", worst, limit);
}

void criterion_shifted_closed_form() {
    const double limit = 1e-8;
    double worst = 0.0;
    const double beta = 1.0, alpha = 0.5;
    const HypSeriesSpec dsinh({1.0}, {(2.0 - alpha) / 2.0, (3.0 - alpha) / 2.0}, 1.0 - alpha,
                              beta * beta / 4.0, 2);
    const FunctionModel model = from_power_series(dsinh, beta / caputo::gamma(2.0 - alpha));
    QuadratureConfig cfg;
    cfg.nodes = 40;
    cfg.subdivisions = 12;
    for (int l = 1; l <= 3; ++l) {
        const double closed = caputo_sinh_shifted(beta, alpha, l, 1.0);
        const double direct = cauchy_repeated_integral(model, l, 1.0, cfg);
        worst = std::max(worst, rel_err(closed, direct));
    }
    report(3, worst <= limit, "shifted sinh closed forms vs repeated integration, depths 1-3",
           worst, limit);
}

void criterion_tanh_product_rule() {
    const double limit = 1e-4;
    const double floor_rel = 1e-13;
    double worst = 0.0;
    bool refinement_ok = true;
    const FunctionModel tanh_model = make_function("tanh");
    for (double a : {0.25, 0.5, 0.75}) {
        for (int i = 1; i <= 15; ++i) {
            const double x = 0.1 * i;
            const double quad = caputo_quadrature(tanh_model, a, x);
            const double e10 = rel_err(caputo_tanh(1.0, a, x, 10).value, quad);
            worst = std::max(worst, e10);
            if (x <= 1.0) {
                // Doubling the truncation must not lose ground (down to the
                // noise floor of the comparison).
                const double e20 = rel_err(caputo_tanh(1.0, a, x, 20).value, quad);
                refinement_ok = refinement_ok && (e20 <= e10 || e20 <= floor_rel);
            }
        }
    }
    report(4, worst <= limit && refinement_ok,
           "tanh via product rule, 10 terms vs quadrature on (0, 1.5], refining at 20", worst,
           limit);
}

void criterion_product_rule_classical() {
    const double limit = 1e-10;
    double worst = 0.0;
    const FunctionModel f = make_function("sinh");
    const FunctionModel g = make_function("sech");
    for (int i = 1; i <= 6; ++i) {
        const double x = 0.25 * i;
        const double sc = 1.0 / std::cosh(x);
        worst = std::max(worst, rel_err(product_rule(f, g, 1.0, x).value, sc * sc));
    }
    report(5, worst <= limit, "product rule collapses to (f g)' at order 1", worst, limit);
}

void criterion_endpoint_dispatch() {
    const double limit = 1e-10;
    double worst = 0.0;
    const double x = 0.8;
    const std::vector<std::string> names = {"x",    "x^2",  "exp", "sinh", "cosh",
                                            "tanh", "sech", "sin", "cos"};
    TruncationPlan plan;
    for (const std::string& name : names) {
        const FunctionModel f = make_function(name);
        const double diff = f.value(x) - f.value(0.0);
        const double slope = f.derivative(x, 1);
        worst = std::max(worst, rel_err(caputo_quadrature(f, 0.0, x), diff));
        worst = std::max(worst, rel_err(caputo_quadrature(f, 1.0, x), slope));
        worst = std::max(worst, rel_err(caputo_series(f, 0.0, x).value, diff));
        worst = std::max(worst, rel_err(caputo_series(f, 1.0, x).value, slope));
        worst = std::max(worst, rel_err(chain_rule(f, make_function("x"), 0.0, x, plan).value,
                                        diff));
        worst = std::max(worst, rel_err(chain_rule(f, make_function("x"), 1.0, x, plan).value,
                                        slope));
    }
    // Closed forms and the tanh product-rule route.
    worst = std::max(worst, rel_err(caputo_sinh(1.0, 0.0, x), std::sinh(x)));
    worst = std::max(worst, rel_err(caputo_sinh(1.0, 1.0, x), std::cosh(x)));
    const double sc = 1.0 / std::cosh(x);
    worst = std::max(worst, rel_err(caputo_tanh(1.0, 0.0, x).value, std::tanh(x)));
    worst = std::max(worst, rel_err(caputo_tanh(1.0, 1.0, x).value, sc * sc));
    worst = std::max(worst,
                     rel_err(product_rule(make_function("sinh"), make_function("sech"), 0.0, x)
                                 .value,
                             std::tanh(x)));
    report(6, worst <= limit, "every route honors the order-0 and order-1 dispatch", worst,
           limit);
}

void criterion_integer_composites() {
    const double limit = 1e-9;
    double worst = 0.0;
    const FunctionModel f1 = make_function("exp"), g1 = make_function("sin");
    const FunctionModel f2 = make_function("tanh"), g2 = make_function("x^2");
    for (double x : {0.4, 1.1}) {
        const Jet c1 = jet_compose(f1, g1.jet_at(x, 6));
        const Jet c2 = jet_compose(f2, g2.jet_at(x, 6));
        for (int k = 0; k <= 6; ++k) {
            worst = std::max(worst, rel_err(di_bruno_kth(f1, g1, k, x), c1.derivative(k)));
            worst = std::max(worst, rel_err(di_bruno_kth(f2, g2, k, x), c2.derivative(k)));
        }
    }
    const FunctionModel ch = make_function("cosh");
    for (double x : {0.5, 1.2}) {
        const Jet se = jet_sech(x, 6);
        for (int n = 0; n <= 6; ++n) {
            worst = std::max(worst, rel_err(inverse_derivative(ch, n, x), se.derivative(n)));
        }
    }
    report(7, worst <= limit,
           "composite k-th derivatives and reciprocal derivatives vs jet arithmetic", worst,
           limit);
}

void criterion_chain_rule() {
    const double limit = 1e-6;
    TruncationPlan plan;
    plan.outer_terms = 20;
    plan.inner_terms = 20;
    const double got = chain_rule(make_function("sinh"), make_function("x"), 0.5, 0.5, plan).value;
    const double want = caputo_sinh(1.0, 0.5, 0.5);
    const double worst = rel_err(got, want);

    // Leading weight is exactly 1 for arbitrary inner functions.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> alpha_dist(0.01, 0.99);
    std::uniform_real_distribution<double> x_dist(0.1, 3.0);
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> terms_dist(5, 20);
    const char* names[] = {"sin", "sinh", "exp", "x^2", "cosh"};
    bool w0_exact = true;
    for (int trial = 0; trial < 100; ++trial) {
        const FunctionModel g = make_function(names[pick(rng)]);
        const double w0 = chain_weight(g, alpha_dist(rng), 0, x_dist(rng), terms_dist(rng));
        w0_exact = w0_exact && (w0 == 1.0);
    }
    report(8, worst <= limit && w0_exact,
           "chain rule with identity inner matches sinh closed form; W_0 == 1 on 100 draws",
           worst, limit);
}

void criterion_cli_table() {
    const double limit = 1e-4;
    const std::string cli = CAPUTO_CLI_BINARY;
    auto run_cli = [&](const std::string& args) {
        const int status = std::system(("\"" + cli + "\" " + args).c_str());
        return (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const char* path) {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool ok = run_cli("fig1 -o acceptance_fig_a.csv") == 0 &&
              run_cli("fig1 -o acceptance_fig_b.csv") == 0;
    const std::string text = slurp("acceptance_fig_a.csv");
    ok = ok && !text.empty() && text == slurp("acceptance_fig_b.csv");

    double worst = 0.0;
    if (ok) {
        const FunctionModel tanh_model = make_function("tanh");
        std::istringstream ss(text);
        std::string line;
        std::getline(ss, line);  // header
        ok = ok && line == "x,alpha_0,alpha_0.25,alpha_0.5,alpha_0.75,alpha_1";
        int rows = 0;
        while (std::getline(ss, line)) {
            ++rows;
            std::istringstream cells(line);
            std::string cell;
            std::vector<double> v;
            while (std::getline(cells, cell, ',')) v.push_back(std::strtod(cell.c_str(), nullptr));
            ok = ok && v.size() == 6;
            if (!ok) break;
            const double x = v[0];
            // Endpoint columns are exact catalog functions.
            worst = std::max(worst, rel_err(v[1], std::tanh(x)));
            const double sc = 1.0 / std::cosh(x);
            worst = std::max(worst, rel_err(v[5], sc * sc));
            // Interior orders track the quadrature within the table's stated
            // truncation accuracy over the first part of the range.
            if (x <= 1.5) {
                const double as[] = {0.25, 0.5, 0.75};
                for (int c = 0; c < 3; ++c) {
                    worst = std::max(
                        worst, rel_err(v[2 + c], caputo_quadrature(tanh_model, as[c], x)));
                }
            }
        }
        ok = ok && rows == 200;
    }
    report(9, ok && worst <= limit,
           "command-line table: deterministic bytes, exact endpoints, quadrature agreement",
           worst, limit);
}

}  // namespace

int main() {
    criterion_closed_form_vs_quadrature();
    criterion_lift_vs_repeated_integral();
    criterion_shifted_closed_form();
    criterion_tanh_product_rule();
    criterion_product_rule_classical();
    criterion_endpoint_dispatch();
    criterion_integer_composites();
    criterion_chain_rule();
    criterion_cli_table();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
