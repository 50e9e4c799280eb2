#pragma once

#include <cstdlib>
#include <stdexcept>

namespace riccati::numeric {

struct NumericConfig {
    double rel_tol = 1e-10;   // series truncation
    int max_terms = 10000;    // series term budget
    double check_tol = 1e-8;  // cross-check tolerance
};

inline void validate(const NumericConfig& cfg) {
    if (!(cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0)) throw std::invalid_argument("rel_tol must lie in (0, 1)");
    if (cfg.max_terms < 100) throw std::invalid_argument("max_terms must be at least 100");
}

/// Default configuration with NUMERIC_TOL (when set) overriding check_tol.
inline NumericConfig configFromEnv() {
    NumericConfig cfg;
    if (const char* env = std::getenv("NUMERIC_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) cfg.check_tol = v;
    }
    return cfg;
}

}  // namespace riccati::numeric
