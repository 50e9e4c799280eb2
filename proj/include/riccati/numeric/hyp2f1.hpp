#pragma once

// Gauss hypergeometric series 2F1(a, b; c; z) summed termwise inside the unit
// disk. Truncation failure is an error, never a silent return; the callers
// keep |z| <= 0.95 where the plain series is adequate.

#include <riccati/numeric/config.hpp>

#include <cmath>
#include <stdexcept>

namespace riccati::numeric {

inline double hyp2f1(double a, double b, double c, double z, const NumericConfig& cfg = {}) {
    validate(cfg);
    if (!(std::fabs(z) < 1.0)) throw std::domain_error("2F1 series requires |z| < 1");
    if (c <= 0.0 && c == std::floor(c)) throw std::domain_error("2F1 parameter c is a nonpositive integer");

    // The tail behind term k is bounded by |term| * q/(1-q) with q -> |z|,
    // so the stop test charges the whole geometric tail against rel_tol
    // instead of just the last term.
    const double tail = 2.0 * (std::fabs(z) / (1.0 - std::fabs(z)) + 1.0);
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;  // terminating series
        if (std::fabs(term) * tail <= cfg.rel_tol * std::fabs(sum)) return sum;
    }
    throw std::runtime_error("2F1 series did not converge within the term budget");
}

}  // namespace riccati::numeric
