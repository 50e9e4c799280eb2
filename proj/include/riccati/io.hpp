#pragma once

// Text, LaTeX and JSON forms. Rational scalars serialize as strings, never
// floats; polynomials as exponent-ascending coefficient arrays. The text
// grammar round-trips: parse(to_text(f)) == f for canonical forms.

#include <riccati/eta.hpp>
#include <riccati/rational_function.hpp>

#include <json.hpp>

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace riccati {

using json = nlohmann::ordered_json;

namespace io_detail {

inline void appendTerm(std::string& out, const Rational& c, std::size_t k, std::string_view var,
                       bool first) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    if (k == 0) {
        out += to_string(mag);
        return;
    }
    if (mag != 1) {
        out += to_string(mag);
        out += '*';
    }
    out += var;
    if (k > 1) {
        out += '^';
        out += std::to_string(k);
    }
}

inline void appendLatexTerm(std::string& out, const Rational& c, std::size_t k, std::string_view var,
                            bool first) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    auto scalar = [](const Rational& q) -> std::string {
        if (is_integer(q)) return numerator(q).str();
        return "\\frac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
    };
    if (k == 0) {
        out += scalar(mag);
        return;
    }
    if (mag != 1) {
        out += scalar(mag);
        out += ' ';
    }
    out += var;
    if (k > 1) {
        out += "^{";
        out += std::to_string(k);
        out += '}';
    }
}

}  // namespace io_detail

inline std::string to_text(const Polynomial& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (c == 0) continue;
        io_detail::appendTerm(out, c, k, var, first);
        first = false;
    }
    return out;
}

/// "(num)/(den)"; a denominator of 1 is omitted and a one-term denominator
/// is left bare, e.g. "(-1 + 864*x)/12".
inline std::string to_text(const RationalFunction& f, std::string_view var = "x") {
    std::string out = "(" + to_text(f.num(), var) + ")";
    const Polynomial& d = f.den();
    if (d == Polynomial(Rational(1))) return out;
    std::size_t terms = 0;
    for (const auto& c : d.coefficients())
        if (c != 0) ++terms;
    out += '/';
    if (terms == 1)
        out += to_text(d, var);
    else
        out += "(" + to_text(d, var) + ")";
    return out;
}

inline std::string to_latex(const Polynomial& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (c == 0) continue;
        io_detail::appendLatexTerm(out, c, k, var, first);
        first = false;
    }
    return out;
}

inline std::string to_latex(const RationalFunction& f, std::string_view var = "x") {
    if (f.den() == Polynomial(Rational(1))) return to_latex(f.num(), var);
    return "\\frac{" + to_latex(f.num(), var) + "}{" + to_latex(f.den(), var) + "}";
}

inline json to_json(const RationalFunction& f, std::string_view var = "x") {
    json j;
    j["var"] = std::string(var);
    auto coeffArray = [](const Polynomial& p) {
        json arr = json::array();
        for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
        return arr;
    };
    j["num"] = coeffArray(f.num());
    j["den"] = coeffArray(f.den());
    return j;
}

inline RationalFunction rationalFunctionFromJson(const json& j) {
    auto poly = [](const json& arr) {
        std::vector<Rational> coeffs;
        coeffs.reserve(arr.size());
        for (const auto& entry : arr) coeffs.push_back(parse_rational(entry.get<std::string>()));
        return Polynomial(std::move(coeffs));
    };
    return RationalFunction::normalized(poly(j.at("num")), poly(j.at("den")));
}

/// Parses the polynomial text grammar emitted by to_text: signed terms of the
/// form "c", "c*x^k", "x^k", joined by " + " / " - ".
inline Polynomial parse_polynomial(std::string_view text, std::string_view var = "x") {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s == "0") return Polynomial();

    std::map<std::size_t, Rational> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term = std::string_view(s).substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("malformed polynomial term");

        Rational coef(1);
        std::size_t k = 0;
        const std::size_t varPos = term.find(var);
        if (varPos == std::string_view::npos) {
            coef = parse_rational(term);
        } else {
            if (varPos > 0) {
                std::string_view head = term.substr(0, varPos);
                if (head.back() == '*') head.remove_suffix(1);
                coef = parse_rational(head);
            }
            std::string_view tail = term.substr(varPos + var.size());
            if (tail.empty()) {
                k = 1;
            } else if (tail.front() == '^') {
                k = static_cast<std::size_t>(std::stoull(std::string(tail.substr(1))));
            } else {
                throw std::invalid_argument("malformed polynomial term");
            }
        }
        terms[k] += negative ? Rational(-coef) : coef;
        pos = end;
    }

    std::size_t degree = 0;
    for (const auto& [k, c] : terms) degree = std::max(degree, k);
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    for (const auto& [k, c] : terms) coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

/// Parses "(num)", "(num)/den" or "(num)/(den)".
inline RationalFunction parse_rational_function(std::string_view text, std::string_view var = "x") {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s.front() != '(') throw std::invalid_argument("expected '(' opening the numerator");
    const std::size_t close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses");
    const Polynomial num = parse_polynomial(std::string_view(s).substr(1, close - 1), var);
    if (close + 1 == s.size()) return RationalFunction::normalized(num, Polynomial(Rational(1)));
    if (s[close + 1] != '/') throw std::invalid_argument("expected '/' after numerator");
    std::string_view denText = std::string_view(s).substr(close + 2);
    if (!denText.empty() && denText.front() == '(') {
        if (denText.back() != ')') throw std::invalid_argument("unbalanced parentheses");
        denText = denText.substr(1, denText.size() - 2);
    }
    return RationalFunction::normalized(num, parse_polynomial(denText, var));
}

inline std::string to_text(const EtaSeries& series) {
    std::string out;
    for (const auto& [exponent, coef] : series.terms) {
        if (out.empty()) {
            if (coef < 0) out += '-';
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        out += 'q';
        if (exponent > 1) {
            out += '^';
            out += std::to_string(exponent);
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(q^" + std::to_string(series.max_exponent + 1) + ")";
    return out;
}

inline json to_json(const EtaSeries& series) {
    json j = json::object();
    for (const auto& [exponent, coef] : series.terms) j[std::to_string(exponent)] = coef;
    return j;
}

}  // namespace riccati
