#pragma once

/**
 * Exact ratios f(n, m, y) = P_{n+1}^m(y) / P_n^m(y) of Ferrers functions,
 * built by raising the order one unit at a time:
 *
 *   f(n, m+1, y) = y - (n+m+1)(1 - y^2) / ((n-m+1) f(n, m, y) - (n+m+1) y)
 *
 * valid for n != m. Along the two production paths the degree parameter is
 * fixed at n = -1/6 and the order starts from f(-1/6, 1/6, y) = y or
 * f(-1/6, 11/6, y) = 1/y, so every produced ratio is an exact rational
 * function of y. The substitution into the curve coordinate happens in the
 * solution builder, not here.
 */

#include <riccati/rational_function.hpp>

#include <numeric>
#include <stdexcept>

namespace riccati {

/// Positive integer i coprime to 6, encoding lambda = i^2/144. Keeping the
/// integer i avoids ever representing sqrt(lambda): 2*sqrt(lambda) = i/6 and
/// 12*sqrt(lambda) = i are exact by construction.
struct AdmissibleIndex {
    unsigned long long value;

    explicit AdmissibleIndex(unsigned long long i) : value(i) {
        if (i == 0 || std::gcd(i, 6ull) != 1) throw std::invalid_argument("inadmissible index");
    }

    Rational lambda() const { return Rational(BigInt(value) * value, 144); }
};

struct RatioState {
    Rational n;          // degree parameter
    Rational m;          // order parameter
    RationalFunction f;  // f(n, m, y)
};

/// One order-raising step: returns the state at m + 1.
inline RatioState ratioStep(const RatioState& state) {
    if (state.n == state.m) throw std::invalid_argument("lemma hypothesis violated: n = m");
    const Rational sum = state.n + state.m + 1;
    const Rational diff = state.n - state.m + 1;
    const RationalFunction y(Polynomial::variable());
    const RationalFunction denom = RationalFunction(diff) * state.f - RationalFunction(sum) * y;
    if (denom.is_zero()) throw std::domain_error("degenerate recursion step");
    const RationalFunction oneMinusY2(Polynomial{Rational(1), Rational(0), Rational(-1)});
    return RatioState{state.n, state.m + 1, y - RationalFunction(sum) * oneMinusY2 / denom};
}

/// f(-1/6, i/6, y) for admissible i other than 5. Indices 1 mod 6 iterate
/// from f = y, indices 5 mod 6 from f = 1/y; i = 5 never reaches a ratio
/// because the -5 + i multiplier in the solution vanishes there.
inline RationalFunction legendreRatio(const AdmissibleIndex& index) {
    const unsigned long long i = index.value;
    if (i == 5) throw std::domain_error("no ratio path for i = 5: the -5 + i multiplier vanishes");

    const Polynomial y = Polynomial::variable();
    RatioState state{Rational(-1, 6), Rational(0), RationalFunction()};
    unsigned long long steps = 0;
    if (i % 6 == 1) {
        state = RatioState{Rational(-1, 6), Rational(1, 6), RationalFunction(y)};
        steps = (i - 1) / 6;
    } else {
        state = RatioState{Rational(-1, 6), Rational(11, 6),
                           RationalFunction(Rational(1)) / RationalFunction(y)};
        steps = (i - 11) / 6;
    }
    for (unsigned long long k = 0; k < steps; ++k) state = ratioStep(state);
    if (state.m != Rational(BigInt(i), 6)) throw std::logic_error("order bookkeeping failed");
    return state.f;
}

}  // namespace riccati
