// Shared value types: fractional order, series diagnostics, truncation and
// quadrature parameters.
#pragma once

#include <stdexcept>

namespace caputo {

// Hard cap on truncated-Taylor order; high-order coefficient recurrences in
// double precision are not trustworthy past this.
inline constexpr int kMaxJetOrder = 64;

// Fractional order restricted to [0, 1]. The exact endpoints select the
// classical results (difference from the origin value, first derivative).
class FractionalOrder {
public:
    FractionalOrder(double alpha) : alpha_(alpha) {
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw std::domain_error("fractional order must lie in [0, 1]");
    }
    double value() const noexcept { return alpha_; }
    bool is_zero() const noexcept { return alpha_ == 0.0; }
    bool is_one() const noexcept { return alpha_ == 1.0; }

private:
    double alpha_;
};

// Outcome of a truncated-series evaluation. converged means the final
// included term fell below tol * |value| (twice in a row); a false flag is a
// diagnostic, not an error.
struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double last_term = 0.0;  // magnitude of the final included term
    bool converged = false;
};

// Panel count and per-panel Gauss node count for the integral evaluators.
struct QuadratureConfig {
    int nodes = 40;        // >= 4
    int subdivisions = 8;  // >= 1

    void validate() const {
        if (nodes < 4) throw std::invalid_argument("quadrature requires nodes >= 4");
        if (subdivisions < 1) throw std::invalid_argument("quadrature requires subdivisions >= 1");
    }
};

// Truncation budget for the double-sum expansions: outer_terms terms of the
// outer sum, inner_terms of each inner one. inner_terms == 0 selects the
// default of twice the outer count.
struct TruncationPlan {
    int outer_terms = 10;
    int inner_terms = 0;
    double tol = 1e-14;

    int resolved_inner() const { return inner_terms > 0 ? inner_terms : 2 * outer_terms; }

    void validate() const {
        if (outer_terms < 1) throw std::invalid_argument("truncation plan requires outer_terms >= 1");
        if (inner_terms < 0) throw std::invalid_argument("truncation plan requires inner_terms >= 0");
        if (!(tol > 0.0)) throw std::invalid_argument("truncation plan requires tol > 0");
    }
};

}  // namespace caputo
