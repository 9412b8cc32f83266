#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "sbm/errors.hpp"

// Small numeric helpers shared across the library: the standard normal
// distribution, bracketed bisection, and stable log-domain utilities.

namespace sbm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Standard normal cumulative distribution function.
inline double norm_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

/// Standard normal density.
inline double norm_pdf(double z) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

/// log(sinh(z)) for z > 0 without overflow.
inline double log_sinh(double z) {
    if (z > 20.0) return z + std::log1p(-std::exp(-2.0 * z)) - std::log(2.0);
    return std::log(std::sinh(z));
}

struct BisectOptions {
    double x_tol = 1e-15;   // absolute tolerance on the bracket width
    int max_iter = 200;
};

// Root of a continuous f on [lo, hi] by bisection. Requires opposite signs at
// the endpoints; an endpoint with f == 0 is returned as-is. The sign structure
// is supplied by the caller (monotonicity arguments), so no derivative-based
// refinement is attempted.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     BisectOptions opt = {}) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw bracket_error("bisect: no sign change on the supplied interval");
    for (int i = 0; i < opt.max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket exhausted at this precision
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < opt.x_tol) break;
    }
    return 0.5 * (lo + hi);
}

// Expands hi geometrically away from lo until f changes sign relative to
// f(lo), then bisects. `step` is the initial offset from lo.
inline double bisect_expanding(const std::function<double(double)>& f, double lo,
                               double step, double limit, BisectOptions opt = {}) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double hi = lo + step;
    while (std::abs(hi - lo) <= limit) {
        double fhi = f(hi);
        if (fhi == 0.0) return hi;
        if ((fhi > 0) != (flo > 0)) return bisect(f, lo, hi, opt);
        hi = lo + 2.0 * (hi - lo);
    }
    throw bracket_error("bisect_expanding: no sign change within the search limit");
}

// Pairwise (cascade) summation; deterministic for a fixed element order and
// independent of how the values were produced.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

} // namespace sbm
