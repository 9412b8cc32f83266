#pragma once

#include <cmath>
#include <string>

#include "sbm/errors.hpp"

namespace sbm {

// Process and problem parameters: skewness probability beta in [0,1] and
// discount rate r > 0. theta = sqrt(2r) is derived on construction and never
// stored independently of r.
class SkewParams {
public:
    SkewParams(double beta, double r) : beta_(beta), r_(r), theta_(std::sqrt(2.0 * r)) {
        if (!(beta >= 0.0 && beta <= 1.0))
            throw domain_error("SkewParams: beta must lie in [0,1], got " + std::to_string(beta));
        if (!(r > 0.0))
            throw domain_error("SkewParams: r must be positive, got " + std::to_string(r));
    }

    double beta() const { return beta_; }
    double r() const { return r_; }
    double theta() const { return theta_; }

    /// True when the process is upward-biased at the origin (beta > 1/2); the
    /// stopping solvers require this regime.
    bool skewed_up() const { return beta_ > 0.5; }

private:
    double beta_;
    double r_;
    double theta_;
};

// Arguments of the transition law: start x, end y, elapsed time t > 0.
struct DensityPoint {
    double x;
    double y;
    double t;
};

} // namespace sbm
