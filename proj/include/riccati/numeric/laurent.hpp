#pragma once

/**
 * The rationality witness at x = infinity. Away from the degenerate
 * parameter values the solution expands as
 *
 *   r(x, lambda) = 72 x + c(lambda) x^{1/3} - 1/12 + ...
 *   c(lambda) = -6 * 2^{2/3} * sqrt(pi) * Gamma(5/6 - s) /
 *               (Gamma(1/6) * Gamma(1/6 - s)),        s = 2 sqrt(lambda),
 *
 * and a rational r forces c(lambda) = 0, i.e. a pole of Gamma(1/6 - s).
 * Whether a Gamma argument is a pole is decided in exact rational arithmetic
 * whenever 144 lambda is a perfect square (then s = i/6 exactly); otherwise
 * the argument provably misses the poles and the value is computed in
 * floating point. The two degenerate outcomes are kept distinct:
 *
 *   zero_by_pole    1/6 - s is a nonpositive integer, the coefficient is an
 *                   exact zero (indices 1 mod 6);
 *   formula_invalid 5/6 - s is a nonpositive integer and the expansion above
 *                   does not apply (indices 5 mod 6).
 */

#include <riccati/numeric/gamma.hpp>
#include <riccati/rational.hpp>

#include <cmath>
#include <numbers>

namespace riccati::numeric {

struct X13Result {
    enum class Kind { value, zero_by_pole, formula_invalid };
    Kind kind;
    double value;  // 0 for zero_by_pole, meaningless for formula_invalid
};

inline X13Result x13Coefficient(const Rational& lambda) {
    if (lambda < 0) throw std::domain_error("imaginary order out of scope");

    const auto evaluate = [](double s) {
        const double c = -6.0 * std::cbrt(4.0) * std::sqrt(std::numbers::pi) * gamma(5.0 / 6.0 - s) /
                         (gamma(1.0 / 6.0) * gamma(1.0 / 6.0 - s));
        return X13Result{X13Result::Kind::value, c};
    };

    const Rational scaled = Rational(144) * lambda;
    if (is_integer(scaled)) {
        const BigInt square = numerator(scaled);
        const BigInt root = boost::multiprecision::sqrt(square);
        if (root * root == square) {
            // s = root/6 exactly; 5/6 - s and 1/6 - s are integers only when
            // root is 5 or 1 mod 6.
            if (root % 6 == 5) return X13Result{X13Result::Kind::formula_invalid, 0.0};
            if (root % 6 == 1) return X13Result{X13Result::Kind::zero_by_pole, 0.0};
            return evaluate(root.convert_to<double>() / 6.0);
        }
    }
    return evaluate(2.0 * std::sqrt(lambda.convert_to<double>()));
}

/// Leading expansion terms; the linear and constant coefficients are fixed.
struct LaurentHead {
    double coef_linear = 72.0;
    double coef_third = 0.0;
    double coef_constant = -1.0 / 12.0;
};

inline LaurentHead laurentHead(const Rational& lambda) {
    const X13Result c = x13Coefficient(lambda);
    if (c.kind == X13Result::Kind::formula_invalid)
        throw std::domain_error("expansion formula does not apply at this lambda");
    return LaurentHead{72.0, c.value, -1.0 / 12.0};
}

}  // namespace riccati::numeric
