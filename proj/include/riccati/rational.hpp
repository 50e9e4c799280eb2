#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace riccati {

// Exact scalars. cpp_rational keeps every value reduced with a positive
// denominator, so zero is uniquely 0/1 and equality is structural.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

/// Parses "p" or "p/q" (optional leading sign on p). Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s, bool allow_sign) -> BigInt {
        if (!s.empty() && allow_sign && (s.front() == '+' || s.front() == '-')) {
            BigInt rest = [&] {
                std::string_view tail = s.substr(1);
                if (tail.empty()) throw std::invalid_argument("malformed rational: bare sign");
                for (char c : tail)
                    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational");
                return BigInt(std::string(tail));
            }();
            return s.front() == '-' ? BigInt(-rest) : rest;
        }
        if (s.empty()) throw std::invalid_argument("malformed rational: empty");
        for (char c : s)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed rational");
        return BigInt(std::string(s));
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
    return Rational(num, den);
}

}  // namespace riccati
