#pragma once

/**
 * Canonical quotients of integer-coefficient polynomials.
 *
 * Invariants of the stored form:
 *   - numerator and denominator are coprime over the rationals,
 *   - both have integer coefficients and their contents are coprime,
 *   - the denominator has a positive leading coefficient and is never zero,
 *   - zero is represented as 0/1.
 *
 * The form is unique, so operator== is plain structural comparison and text
 * or JSON output is exact.
 *
 * Arithmetic keeps results canonical without a full gcd per operation:
 * products cross-reduce the four corners, and sums use the classical
 * two-gcd scheme (reduce by g = gcd of denominators, then by gcd(t, g)),
 * which yields a reduced fraction whenever the operands are reduced. The
 * full gcd runs only in normalized(), the entry point for arbitrary
 * numerator/denominator pairs.
 */

#include <riccati/polynomial.hpp>

#include <stdexcept>
#include <utility>

namespace riccati {

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}

    RationalFunction(const Polynomial& p) { *this = canonical_scale(p, Polynomial(Rational(1))); }

    RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}

    RationalFunction(const Polynomial& num, const Polynomial& den) { *this = normalized(num, den); }

    /// Fully reduced canonical form of num/den; throws on a zero denominator.
    static RationalFunction normalized(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num.is_zero()) return RationalFunction();
        auto [in, sn] = detail::scaled_integer(num);
        auto [id, sd] = detail::scaled_integer(den);
        const detail::IntPoly g = detail::gcd_core(in, id);
        if (g.size() > 1 || g.front() != 1) {
            in = detail::div_exact(in, g);
            id = detail::div_exact(id, g);
        }
        const Rational s = sn / sd;
        return finalize(detail::scale(std::move(in), numerator(s)),
                        detail::scale(std::move(id), denominator(s)));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const detail::IntPoly an = detail::int_coefficients(a.num_);
        const detail::IntPoly ad = detail::int_coefficients(a.den_);
        const detail::IntPoly bn = detail::int_coefficients(b.num_);
        const detail::IntPoly bd = detail::int_coefficients(b.den_);
        const detail::IntPoly g = detail::gcd_core(ad, bd);
        const detail::IntPoly adg = detail::div_exact(ad, g);
        const detail::IntPoly bdg = detail::div_exact(bd, g);
        detail::IntPoly t = detail::add(detail::mul(an, bdg), detail::mul(bn, adg));
        if (t.empty()) return RationalFunction();
        const detail::IntPoly h = detail::gcd_core(t, g);
        return finalize(detail::div_exact(t, h), detail::mul(adg, detail::div_exact(bd, h)));
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        const detail::IntPoly an = detail::int_coefficients(a.num_);
        const detail::IntPoly ad = detail::int_coefficients(a.den_);
        if (a == b)  // squaring: the corners are already coprime
            return finalize(detail::mul(an, an), detail::mul(ad, ad));
        const detail::IntPoly bn = detail::int_coefficients(b.num_);
        const detail::IntPoly bd = detail::int_coefficients(b.den_);
        const detail::IntPoly g1 = detail::gcd_core(an, bd);
        const detail::IntPoly g2 = detail::gcd_core(bn, ad);
        return finalize(detail::mul(detail::div_exact(an, g1), detail::div_exact(bn, g2)),
                        detail::mul(detail::div_exact(ad, g2), detail::div_exact(bd, g1)));
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        if (a.is_zero()) return RationalFunction();
        const detail::IntPoly an = detail::int_coefficients(a.num_);
        const detail::IntPoly ad = detail::int_coefficients(a.den_);
        const detail::IntPoly bn = detail::int_coefficients(b.num_);
        const detail::IntPoly bd = detail::int_coefficients(b.den_);
        const detail::IntPoly g1 = detail::gcd_core(an, bn);
        const detail::IntPoly g2 = detail::gcd_core(ad, bd);
        return finalize(detail::mul(detail::div_exact(an, g1), detail::div_exact(bd, g2)),
                        detail::mul(detail::div_exact(ad, g2), detail::div_exact(bn, g1)));
    }

    /// Quotient-rule derivative. The shared square part gcd(den, den') is
    /// divided out, which leaves the result reduced up to content.
    RationalFunction derivative() const {
        if (is_zero()) return RationalFunction();
        const detail::IntPoly n = detail::int_coefficients(num_);
        const detail::IntPoly d = detail::int_coefficients(den_);
        const detail::IntPoly nd = detail::derivative(n);
        const detail::IntPoly dd = detail::derivative(d);
        if (dd.empty()) {  // constant denominator
            if (nd.empty()) return RationalFunction();
            return finalize(nd, d);
        }
        detail::IntPoly raw = detail::sub(detail::mul(nd, d), detail::mul(n, dd));
        if (raw.empty()) return RationalFunction();
        const detail::IntPoly sq = detail::gcd_core(d, dd);
        return finalize(detail::div_exact(raw, sq), detail::div_exact(detail::mul(d, d), sq));
    }

    /// Exact value at x0; evaluation at a pole is an error.
    Rational evaluate(const Rational& x0) const {
        const Rational dv = den_.evaluate(x0);
        if (dv == 0) throw std::domain_error("pole at " + to_string(x0));
        return num_.evaluate(x0) / dv;
    }

    /// Substitutes x := inner(x). Composition cannot introduce a common
    /// factor: a shared root would pull back to a shared root of num and den.
    RationalFunction substitute(const Polynomial& inner) const {
        const Polynomial dn = den_.compose(inner);
        if (dn.is_zero()) throw std::domain_error("substitution maps denominator to zero");
        if (is_zero()) return RationalFunction();
        return canonical_scale(num_.compose(inner), dn);
    }

  private:
    Polynomial num_;
    Polynomial den_;

    struct raw_tag {};
    RationalFunction(raw_tag, Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) {}

    // Joint content strip and sign fix for a pair already coprime over Q.
    static RationalFunction finalize(detail::IntPoly num, detail::IntPoly den) {
        if (num.empty()) return RationalFunction();
        const BigInt g = boost::multiprecision::gcd(detail::content(num), detail::content(den));
        if (g > 1) {
            num = detail::divide_content(std::move(num), g);
            den = detail::divide_content(std::move(den), g);
        }
        if (den.back() < 0) {
            for (auto& c : num) c = -c;
            for (auto& c : den) c = -c;
        }
        return RationalFunction(raw_tag{}, detail::to_polynomial(num), detail::to_polynomial(den));
    }

    // Same as normalized() minus the polynomial gcd, for pairs known coprime.
    static RationalFunction canonical_scale(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num.is_zero()) return RationalFunction();
        auto [in, sn] = detail::scaled_integer(num);
        auto [id, sd] = detail::scaled_integer(den);
        const Rational s = sn / sd;
        return finalize(detail::scale(std::move(in), numerator(s)),
                        detail::scale(std::move(id), denominator(s)));
    }
};

}  // namespace riccati
