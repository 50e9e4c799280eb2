#pragma once

/**
 * The Riccati equation on elliptic curves,
 *
 *   r'(x) + C_x r(x)^2 - 60 = lambda C_x,    C_x = 1 / ((1 - 432 x) x),
 *
 * its exact rational solutions for admissible lambda = i^2/144 (i coprime
 * to 6), and the admissibility classifier. The solution specializes
 *
 *   r(x, lambda) = (1/12) (-5 + 4320 x + (-5 + 12 sqrt(lambda)) *
 *                  P_{5/6}^{2 sqrt(lambda)}(-1 + 864 x) /
 *                  P_{-1/6}^{2 sqrt(lambda)}(-1 + 864 x))
 *
 * with the Ferrers ratio replaced by its exact rational form, so everything
 * stays in Q(x). verify() is the independent check: the residual is computed
 * exactly and must be the zero rational function.
 */

#include <riccati/legendre_ratio.hpp>

#include <optional>
#include <vector>

namespace riccati {

/// The Griffith-Yukawa coupling 1 / ((1 - 432 x) x).
inline RationalFunction coupling() {
    return RationalFunction(Polynomial(Rational(1)),
                            Polynomial{Rational(0), Rational(1), Rational(-432)});
}

/// One equation instance. The production values are coupling() and 60, but a
/// perturbed instance can be fed to residual() directly.
struct RiccatiInstance {
    RationalFunction coupling;
    Rational constant;
    Rational lambda;
};

/// r' + C r^2 - constant - lambda C, assembled over the common denominator
/// Q D^2 and canonicalized once at the end. Identically zero exactly when r
/// solves the instance.
inline RationalFunction residual(const RationalFunction& r, const RiccatiInstance& instance) {
    const Polynomial& N = r.num();
    const Polynomial& D = r.den();
    const Polynomial& P = instance.coupling.num();
    const Polynomial& Q = instance.coupling.den();
    const Polynomial D2 = D * D;
    const Polynomial wronskian = N.derivative() * D - N * D.derivative();
    const Polynomial num = wronskian * Q + P * (N * N) - instance.constant * (Q * D2) -
                           instance.lambda * (P * D2);
    return RationalFunction::normalized(num, Q * D2);
}

inline RationalFunction residual(const RationalFunction& r, const Rational& lambda) {
    return residual(r, RiccatiInstance{coupling(), Rational(60), lambda});
}

/// The exact solution r(x, i^2/144). For i = 5 the ratio multiplier -5 + i
/// vanishes and the solution is the bare affine part -5/12 + 360 x.
inline RationalFunction solution(const AdmissibleIndex& index) {
    const RationalFunction affine(Polynomial{Rational(-5, 12), Rational(360)});
    if (index.value == 5) return affine;
    const Polynomial inner{Rational(-1), Rational(864)};  // y = -1 + 864 x
    const Rational multiplier(BigInt(index.value) - 5, 12);
    return affine + RationalFunction(multiplier) * legendreRatio(index).substitute(inner);
}

/// Decides whether lambda admits a rational solution: true exactly when
/// 144 lambda is the square of a positive integer coprime to 6, in which case
/// that integer is returned as the witness. Exact integer arithmetic
/// throughout; no floating-point square roots.
inline std::optional<BigInt> isAdmissible(const Rational& lambda) {
    if (lambda < 0) throw std::domain_error("imaginary order out of scope");
    const Rational scaled = Rational(144) * lambda;
    if (!is_integer(scaled)) return std::nullopt;
    const BigInt square = numerator(scaled);
    const BigInt root = boost::multiprecision::sqrt(square);
    if (root * root != square || root == 0) return std::nullopt;
    if (boost::multiprecision::gcd(root, BigInt(6)) != 1) return std::nullopt;
    return root;
}

/// The first k admissible indices: 1, 5, 7, 11, 13, ...
inline std::vector<unsigned long long> admissibleIndices(std::size_t k) {
    if (k == 0) throw std::invalid_argument("need at least one index");
    std::vector<unsigned long long> out;
    out.reserve(k);
    unsigned long long i = 1;
    while (out.size() < k) {
        out.push_back(i);
        i += (i % 6 == 1) ? 4 : 2;
    }
    return out;
}

}  // namespace riccati
