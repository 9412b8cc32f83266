#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbm/process.hpp"

namespace sbm {

// Exercise reward g with one-sided first derivatives and a second derivative
// on its declared smooth region. Rewards are supplied with analytic
// derivatives (the solver's root functions consume g' and g'' directly);
// validate_payoff cross-checks them by central differences.
//
// Requirements on g: continuous, non-decreasing, non-negative, finite
// one-sided derivatives, and g/psi -> 0 in both tails.
struct Payoff {
    std::function<double(double)> eval;    // g(x) >= 0
    std::function<double(double)> dplus;   // right derivative
    std::function<double(double)> dminus;  // left derivative
    std::function<double(double)> d2;      // second derivative on the smooth region
    std::optional<double> smooth_from;     // left endpoint of the declared C^2 region
    std::optional<double> strike;          // set for the built-in shifted call

    double operator()(double x) const { return eval(x); }

    /// g'(x) where the payoff is differentiable; callers must stay off kinks.
    double deriv(double x) const { return dplus(x); }
};

/// The piecewise linear reward g(x) = max(x + K, 0) with strike shift K > 0.
inline Payoff shifted_call(double strike) {
    if (!(strike > 0.0)) throw domain_error("shifted_call: K must be positive");
    const double K = strike;
    Payoff g;
    g.eval = [K](double x) { return x + K > 0.0 ? x + K : 0.0; };
    g.dplus = [K](double x) { return x >= -K ? 1.0 : 0.0; };
    g.dminus = [K](double x) { return x > -K ? 1.0 : 0.0; };
    g.d2 = [](double) { return 0.0; };
    g.smooth_from = std::nullopt;  // any point right of -K qualifies; chosen per solve
    g.strike = K;
    return g;
}

struct PayoffViolation {
    std::string check;   // "nonnegative", "monotone", "derivative", "decay"
    double x;
    std::string detail;
};

struct PayoffReport {
    bool passed = true;
    std::vector<PayoffViolation> violations;

    const PayoffViolation* first_violation() const {
        return violations.empty() ? nullptr : &violations.front();
    }
};

// Checks (g1)-style properties on the supplied grid: non-negativity,
// monotonicity, agreement of the declared derivatives with central
// differences (tolerance 1e-6, skipping non-differentiable points where the
// one-sided derivatives disagree), and tail decay of g/psi. The decay check
// is operational: the ratio at each grid extreme must be below 1e-2 of its
// maximum over the grid.
inline PayoffReport validate_payoff(const Payoff& g, const SkewParams& p,
                                    std::span<const double> grid) {
    if (grid.empty()) throw domain_error("validate_payoff: empty grid");
    PayoffReport rep;
    auto flag = [&](const char* check, double x, std::string detail) {
        rep.passed = false;
        rep.violations.push_back({check, x, std::move(detail)});
    };

    double prev = -kInf;
    double max_log_ratio = -kInf;
    std::vector<double> log_ratio(grid.size(), -kInf);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const double v = g.eval(x);
        if (!(v >= 0.0)) flag("nonnegative", x, "g(x) = " + std::to_string(v));
        if (i > 0 && v < prev - 1e-12 * std::max(1.0, std::abs(prev)))
            flag("monotone", x, "g decreases between grid points");
        prev = v;
        if (g.dplus(x) < 0.0 || g.dminus(x) < 0.0)
            flag("monotone", x, "negative one-sided derivative");
        if (v > 0.0) {
            log_ratio[i] = std::log(v) - log_psi(x, p);
            max_log_ratio = std::max(max_log_ratio, log_ratio[i]);
        }
    }

    // derivative cross-check by central differences, off kinks
    const double h = 1e-6;
    for (double x : grid) {
        if (std::abs(g.dplus(x) - g.dminus(x)) > 1e-12) continue;  // declared kink
        const double num = (g.eval(x + h) - g.eval(x - h)) / (2.0 * h);
        if (std::abs(num - g.dplus(x)) > 1e-6 * std::max(1.0, std::abs(num)) + 1e-4 * h)
            flag("derivative", x,
                 "analytic " + std::to_string(g.dplus(x)) + " vs central " + std::to_string(num));
    }

    // (g2) decay at the grid extremes
    for (std::size_t i : {std::size_t{0}, grid.size() - 1}) {
        if (log_ratio[i] > max_log_ratio + std::log(1e-2))
            flag("decay", grid[i], "g/psi does not vanish toward this grid end");
    }
    return rep;
}

} // namespace sbm
