#pragma once

/**
 * Ferrers functions of the first kind on (-1, 1),
 *
 *   P_nu^mu(y) = ((1+y)/(1-y))^{mu/2} / Gamma(1-mu) *
 *                2F1(-nu, nu+1; 1-mu; (1-y)/2),
 *
 * plus the two three-term recurrences used as an independent consistency
 * check on the exact ratio recursion.
 *
 * For mu a positive integer the prefactor 1/Gamma(1-mu) vanishes against a
 * pole of the series; the limit is taken in closed form:
 *
 *   P_nu^m(y) = (1-y^2)^{m/2} / (2^m m!) * (-nu)_m (nu+1)_m *
 *               2F1(m-nu, nu+m+1; m+1; (1-y)/2).
 *
 * Arguments with |y| >= 1 are a hard error, not a branch choice.
 */

#include <riccati/numeric/gamma.hpp>
#include <riccati/numeric/hyp2f1.hpp>

#include <algorithm>
#include <cmath>

namespace riccati::numeric {

inline double ferrersP(double nu, double mu, double y, const NumericConfig& cfg = {}) {
    if (!(y > -1.0 && y < 1.0)) throw std::domain_error("Ferrers argument must lie in (-1, 1)");
    const double z = (1.0 - y) / 2.0;

    const double rounded = std::round(mu);
    if (std::fabs(mu - rounded) < 1e-12 && rounded >= 1.0) {
        const int m = static_cast<int>(rounded);
        double pochhammer = 1.0;
        for (int j = 0; j < m; ++j) pochhammer *= (-nu + j) * (nu + 1.0 + j);
        if (pochhammer == 0.0) return 0.0;  // integer degree below the order
        double factorial = 1.0;
        for (int j = 2; j <= m; ++j) factorial *= j;
        const double prefactor = std::pow(1.0 - y * y, m / 2.0) / (std::ldexp(1.0, m) * factorial);
        return prefactor * pochhammer * hyp2f1(m - nu, nu + 1.0 + m, m + 1.0, z, cfg);
    }

    return std::pow((1.0 + y) / (1.0 - y), mu / 2.0) / gamma(1.0 - mu) *
           hyp2f1(-nu, nu + 1.0, 1.0 - mu, z, cfg);
}

/// Residuals of the two recurrences, each normalized by the largest
/// participating term:
///   sqrt(1-y^2) P_nu^{mu+2} + 2(mu+1) y P_nu^{mu+1}
///       + (nu-mu)(nu+mu+1) sqrt(1-y^2) P_nu^mu = 0
///   sqrt(1-y^2) P_nu^{mu+1} - (nu-mu+1) P_{nu+1}^mu + (nu+mu+1) y P_nu^mu = 0
struct RecurrenceResiduals {
    double order_recurrence;
    double degree_recurrence;
};

inline RecurrenceResiduals recurrenceResiduals(double nu, double mu, double y,
                                               const NumericConfig& cfg = {}) {
    const double p0 = ferrersP(nu, mu, y, cfg);
    const double p1 = ferrersP(nu, mu + 1.0, y, cfg);
    const double p2 = ferrersP(nu, mu + 2.0, y, cfg);
    const double pUp = ferrersP(nu + 1.0, mu, y, cfg);
    const double s = std::sqrt(1.0 - y * y);

    const double a1 = s * p2;
    const double a2 = 2.0 * (mu + 1.0) * y * p1;
    const double a3 = (nu - mu) * (nu + mu + 1.0) * s * p0;
    const double scale1 = std::max({std::fabs(a1), std::fabs(a2), std::fabs(a3)});

    const double b1 = s * p1;
    const double b2 = -(nu - mu + 1.0) * pUp;
    const double b3 = (nu + mu + 1.0) * y * p0;
    const double scale2 = std::max({std::fabs(b1), std::fabs(b2), std::fabs(b3)});

    return RecurrenceResiduals{
        scale1 > 0.0 ? std::fabs(a1 + a2 + a3) / scale1 : 0.0,
        scale2 > 0.0 ? std::fabs(b1 + b2 + b3) / scale2 : 0.0,
    };
}

}  // namespace riccati::numeric
