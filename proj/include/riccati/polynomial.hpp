#pragma once

/**
 * Dense univariate polynomials over exact rationals.
 *
 * Coefficients are stored ascending by exponent with no trailing zeros, so
 * structural equality is value equality. The zero polynomial is the empty
 * coefficient vector; its degree is an empty optional, never a numeric
 * sentinel.
 *
 * The gcd runs a primitive pseudo-remainder sequence over the integers and
 * returns the monic generator over the rationals. Degrees stay small here,
 * a few dozen at most, so storage is dense and products are schoolbook.
 */

#include <riccati/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace riccati {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }
    Polynomial(const Rational& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }

    /// The monomial x.
    static Polynomial variable() { return Polynomial{Rational(0), Rational(1)}; }

    /// c * x^k.
    static Polynomial monomial(const Rational& c, std::size_t k) {
        Polynomial p;
        if (c == 0) return p;
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or an empty optional for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const Rational& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool integer_coefficients() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
        r.trim();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        if (s == 0) return Polynomial();
        Polynomial r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial derivative() const {
        Polynomial r;
        if (coeffs_.size() <= 1) return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            r.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<unsigned long long>(k));
        r.trim();
        return r;
    }

    Rational evaluate(const Rational& x0) const {
        Rational acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x0 + coeffs_[k];
        return acc;
    }

    /// this(inner(x)), by Horner over the inner polynomial.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * inner + Polynomial(coeffs_[k]);
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("monic of zero polynomial");
        return *this * (Rational(1) / leading());
    }

    /// Quotient and remainder over the rationals; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        Polynomial q, r = a;
        while (!r.is_zero() && r.coeffs_.size() >= b.coeffs_.size()) {
            const std::size_t shift = r.coeffs_.size() - b.coeffs_.size();
            const Rational factor = r.leading() / b.leading();
            q = q + Polynomial::monomial(factor, shift);
            Polynomial sub;
            sub.coeffs_.assign(shift + b.coeffs_.size(), Rational(0));
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
                sub.coeffs_[k + shift] = b.coeffs_[k] * factor;
            sub.trim();
            r = r - sub;
        }
        return {q, r};
    }

    /// Exact quotient; throws std::logic_error if the division leaves a remainder.
    Polynomial divide_exact(const Polynomial& divisor) const {
        auto [q, r] = divmod(*this, divisor);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

  private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

namespace detail {

// Integer-coefficient kernels behind the canonical rational-function form and
// the gcd. Representation mirrors Polynomial: ascending, empty == zero.
using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::size_t deg(const IntPoly& p) { return p.size() - 1; }

inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;  // >= 0; 0 only for the zero polynomial
}

inline IntPoly scale(IntPoly p, const BigInt& s) {
    if (s == 0) return {};
    for (auto& c : p) c *= s;
    return p;
}

inline IntPoly divide_content(IntPoly p, const BigInt& g) {
    for (auto& c : p) c /= g;
    return p;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    trim(r);
    return r;
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    trim(r);
    return r;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline IntPoly derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly r(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * k;
    trim(r);
    return r;
}

// Associate of the pseudo-remainder of a by b (deg a >= deg b >= 0). Only an
// associate is needed: callers strip content immediately afterwards.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const BigInt& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const BigInt top = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= top * b[k];
        trim(a);
    }
    return a;
}

/// Exact division in Z[x]; throws std::logic_error when the divisor does not divide.
inline IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("inexact integer polynomial division");
    IntPoly r = a;
    IntPoly q(a.size() - b.size() + 1, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt c = r[b.size() - 1 + k];
        if (c == 0) continue;
        if (c % b.back() != 0) throw std::logic_error("inexact integer polynomial division");
        c /= b.back();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[j + k] -= c * b[j];
    }
    for (const auto& c : r)
        if (c != 0) throw std::logic_error("inexact integer polynomial division");
    trim(q);
    return q;
}

/// Full gcd in Z[x] (content included), with positive leading coefficient.
/// gcd(0, 0) is the zero polynomial here; public entry points reject that case.
inline IntPoly gcd_core(IntPoly a, IntPoly b) {
    auto positive = [](IntPoly p) {
        if (!p.empty() && p.back() < 0)
            for (auto& c : p) c = -c;
        return p;
    };
    if (a.empty()) return positive(std::move(b));
    if (b.empty()) return positive(std::move(a));

    const BigInt ca = content(a);
    const BigInt cb = content(b);
    const BigInt cont = boost::multiprecision::gcd(ca, cb);
    a = divide_content(std::move(a), ca);
    b = divide_content(std::move(b), cb);
    if (a.size() < b.size()) a.swap(b);
    while (b.size() > 1) {
        IntPoly r = pseudo_rem(std::move(a), b);
        if (!r.empty()) {
            const BigInt cr = content(r);
            r = divide_content(std::move(r), cr);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!b.empty()) return {cont};  // nonzero constant remainder: coprime primitive parts
    return positive(scale(std::move(a), cont));
}

/// p as scale * primitive-integer-polynomial with scale > 0 (sign stays in the
/// coefficients). Precondition: p nonzero.
inline std::pair<IntPoly, Rational> scaled_integer(const Polynomial& p) {
    BigInt lcm_den = 1;
    for (const auto& c : p.coefficients())
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    IntPoly ip(p.coefficients().size());
    for (std::size_t k = 0; k < ip.size(); ++k) {
        const Rational& c = p.coefficients()[k];
        ip[k] = numerator(c) * (lcm_den / denominator(c));
    }
    const BigInt g = content(ip);
    ip = divide_content(std::move(ip), g);
    return {std::move(ip), Rational(g, lcm_den)};
}

inline Polynomial to_polynomial(const IntPoly& p) {
    std::vector<Rational> coeffs(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) coeffs[k] = Rational(p[k]);
    return Polynomial(std::move(coeffs));
}

inline IntPoly int_coefficients(const Polynomial& p) {
    IntPoly ip(p.coefficients().size());
    for (std::size_t k = 0; k < ip.size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (!is_integer(c)) throw std::logic_error("expected integer coefficients");
        ip[k] = numerator(c);
    }
    return ip;
}

}  // namespace detail

/// Monic greatest common divisor over the rationals.
/// Both arguments zero is an error ("gcd undefined").
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd undefined for two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const detail::IntPoly g = detail::gcd_core(detail::scaled_integer(a).first,
                                               detail::scaled_integer(b).first);
    return detail::to_polynomial(g).monic();
}

}  // namespace riccati
