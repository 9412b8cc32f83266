#pragma once

#include <cmath>

#include "sbm/math.hpp"
#include "sbm/params.hpp"

// Closed-form analytics of skew Brownian motion: scale function and speed
// density, the increasing/decreasing fundamental solutions psi and phi of the
// resolvent equation, the transition law (density, distribution, mean, moment
// generating function), and the Wronskian identity.
//
// The process behaves like Brownian motion away from the origin; at 0 an
// excursion goes up with probability beta. Fundamental solutions are affine
// combinations of e^{theta x} and e^{-theta x} on each side of 0, glued so
// that they are differentiable with respect to the scale function at 0 (the
// ordinary derivatives jump there).

namespace sbm {

/// Scale function: x/beta for x >= 0, x/(1-beta) for x <= 0.
inline double scale(double x, const SkewParams& p) {
    if (x == 0.0) return 0.0;
    if (x > 0.0) {
        if (p.beta() == 0.0) throw domain_error("scale: beta=0 has no finite scale on x>0");
        return x / p.beta();
    }
    if (p.beta() == 1.0) throw domain_error("scale: beta=1 has no finite scale on x<0");
    return x / (1.0 - p.beta());
}

/// Derivative of the scale function off the origin.
inline double scale_prime(double x, const SkewParams& p) {
    if (x == 0.0) throw domain_error("scale_prime: undefined at the skew point");
    if (x > 0.0) {
        if (p.beta() == 0.0) throw domain_error("scale_prime: beta=0 on x>0");
        return 1.0 / p.beta();
    }
    if (p.beta() == 1.0) throw domain_error("scale_prime: beta=1 on x<0");
    return 1.0 / (1.0 - p.beta());
}

/// Speed measure density: 2*beta for x > 0, 2*(1-beta) for x < 0. No value is
/// assigned at the skew point itself.
inline double speed_density(double x, const SkewParams& p) {
    if (x == 0.0) throw domain_error("speed_density: no density value at x=0");
    return x > 0.0 ? 2.0 * p.beta() : 2.0 * (1.0 - p.beta());
}

/// Increasing fundamental solution. Ties at x=0 evaluate via the x>=0 branch
/// (both branches equal 1 there).
inline double psi(double x, const SkewParams& p) {
    const double th = p.theta();
    if (x >= 0.0) {
        if (p.beta() == 0.0) throw domain_error("psi: undefined for beta=0");
        const double a = 1.0 / (2.0 * p.beta());
        return a * std::exp(th * x) + (1.0 - a) * std::exp(-th * x);
    }
    return std::exp(th * x);
}

/// log(psi(x)), stable for large theta*x where psi itself would overflow.
inline double log_psi(double x, const SkewParams& p) {
    const double th = p.theta();
    if (x >= 0.0) {
        if (p.beta() == 0.0) throw domain_error("log_psi: undefined for beta=0");
        const double a = 1.0 / (2.0 * p.beta());
        return th * x + std::log(a + (1.0 - a) * std::exp(-2.0 * th * x));
    }
    return th * x;
}

/// Decreasing fundamental solution.
inline double phi(double x, const SkewParams& p) {
    const double th = p.theta();
    if (x >= 0.0) return std::exp(-th * x);
    if (p.beta() == 1.0) throw domain_error("phi: undefined for beta=1");
    const double c = 1.0 / (2.0 * (1.0 - p.beta()));
    return c * ((1.0 - 2.0 * p.beta()) * std::exp(th * x) + std::exp(-th * x));
}

/// log(phi(x)), stable for large negative theta*x.
inline double log_phi(double x, const SkewParams& p) {
    const double th = p.theta();
    if (x >= 0.0) return -th * x;
    if (p.beta() == 1.0) throw domain_error("log_phi: undefined for beta=1");
    const double c = 1.0 / (2.0 * (1.0 - p.beta()));
    return -th * x + std::log(c * ((1.0 - 2.0 * p.beta()) * std::exp(2.0 * th * x) + 1.0));
}

/// Ordinary derivative of psi; one-sided at the origin is not defined here.
inline double psi_prime(double x, const SkewParams& p) {
    if (x == 0.0) throw domain_error("psi_prime: not classically differentiable at 0");
    const double th = p.theta();
    if (x > 0.0) {
        if (p.beta() == 0.0) throw domain_error("psi_prime: undefined for beta=0");
        const double a = 1.0 / (2.0 * p.beta());
        return th * (a * std::exp(th * x) - (1.0 - a) * std::exp(-th * x));
    }
    return th * std::exp(th * x);
}

/// Ordinary derivative of phi off the origin.
inline double phi_prime(double x, const SkewParams& p) {
    if (x == 0.0) throw domain_error("phi_prime: not classically differentiable at 0");
    const double th = p.theta();
    if (x > 0.0) return -th * std::exp(-th * x);
    if (p.beta() == 1.0) throw domain_error("phi_prime: undefined for beta=1");
    const double c = 1.0 / (2.0 * (1.0 - p.beta()));
    return th * c * ((1.0 - 2.0 * p.beta()) * std::exp(th * x) - std::exp(-th * x));
}

/// Transition density of the process at time t: Gaussian kernel plus the
/// sign-flipped reflected kernel weighted by (2*beta - 1).
inline double transition_density(const DensityPoint& pt, const SkewParams& p) {
    if (!(pt.t > 0.0)) throw domain_error("transition_density: t must be positive");
    const double inv = 1.0 / std::sqrt(pt.t);
    const double g1 = norm_pdf((pt.y - pt.x) * inv) * inv;
    const double g2 = norm_pdf((std::abs(pt.x) + std::abs(pt.y)) * inv) * inv;
    const double sgn = pt.y > 0.0 ? 1.0 : (pt.y < 0.0 ? -1.0 : 0.0);
    return g1 + (2.0 * p.beta() - 1.0) * sgn * g2;
}

// P_x[X_t <= y]. The reflected kernel integrates to a single normal
// distribution term: F(y) = Phi((y-x)/sqrt t) - (2b-1) Phi(-(|x|+|y|)/sqrt t),
// which covers both signs of y.
inline double transition_cdf(const DensityPoint& pt, const SkewParams& p) {
    if (!(pt.t > 0.0)) throw domain_error("transition_cdf: t must be positive");
    const double inv = 1.0 / std::sqrt(pt.t);
    return norm_cdf((pt.y - pt.x) * inv) -
           (2.0 * p.beta() - 1.0) * norm_cdf(-(std::abs(pt.x) + std::abs(pt.y)) * inv);
}

/// E_x[X_t].
inline double mean(double x, double t, const SkewParams& p) {
    if (!(t > 0.0)) throw domain_error("mean: t must be positive");
    const double st = std::sqrt(t);
    const double ax = std::abs(x);
    const double w = 2.0 * p.beta() - 1.0;
    return x + 2.0 * w * st * norm_pdf(ax / st) - 2.0 * w * ax * norm_cdf(-ax / st);
}

/// E_x[exp(lambda X_t)].
inline double mgf(double x, double t, double lambda, const SkewParams& p) {
    if (!(t > 0.0)) throw domain_error("mgf: t must be positive");
    const double st = std::sqrt(t);
    const double ax = std::abs(x);
    const double w = 2.0 * p.beta() - 1.0;
    return std::exp(lambda * x + 0.5 * lambda * lambda * t) *
           (1.0 + w * std::exp(-lambda * (ax + x)) * norm_cdf((lambda * t - ax) / st) -
            w * std::exp(lambda * (ax - x)) * norm_cdf(-(lambda * t + ax) / st));
}

// (psi'/S') phi - (phi'/S') psi - theta. Identically zero for beta in (0,1);
// exposed as a residual so tests can assert the identity to machine precision.
inline double wronskian_residual(double x, const SkewParams& p) {
    if (x == 0.0) throw domain_error("wronskian_residual: use x != 0");
    const double sp = scale_prime(x, p);
    return (psi_prime(x, p) / sp) * phi(x, p) - (phi_prime(x, p) / sp) * psi(x, p) - p.theta();
}

} // namespace sbm
