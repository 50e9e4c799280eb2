// Command-line surface: construct, verify and classify exact rational
// solutions of the elliptic-curve Riccati equation, expand eta(q^24), and run
// the floating-point cross-checks.
//
// Exit codes: 0 success / verified, 1 verification failed, 2 invalid input.

#include <riccati/eta.hpp>
#include <riccati/io.hpp>
#include <riccati/numeric/ferrers.hpp>
#include <riccati/numeric/laurent.hpp>
#include <riccati/riccati.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace riccati;

int cmdConstruct(unsigned long long i, const std::string& format) {
    const RationalFunction r = solution(AdmissibleIndex(i));
    if (format == "json")
        std::cout << to_json(r).dump() << "\n";
    else if (format == "latex")
        std::cout << to_latex(r) << "\n";
    else
        std::cout << to_text(r) << "\n";
    return 0;
}

int cmdVerify(unsigned long long i, const std::optional<std::string>& lambdaText) {
    const AdmissibleIndex index(i);
    const Rational lambda = lambdaText ? parse_rational(*lambdaText) : index.lambda();
    const RationalFunction res = residual(solution(index), lambda);
    if (res.is_zero()) {
        std::cout << "residual = 0\n";
        return 0;
    }
    std::cout << "residual = " << to_text(res) << "\n";
    return 1;
}

int cmdVerifyAll(unsigned long long maxI, bool parallel) {
    std::vector<unsigned long long> indices;
    for (unsigned long long i = 1; i <= maxI; i += (i % 6 == 1) ? 4 : 2) indices.push_back(i);

    std::vector<char> ok(indices.size(), 0);
    auto verifyOne = [](unsigned long long i) {
        const AdmissibleIndex index(i);
        return residual(solution(index), index.lambda()).is_zero();
    };
    if (parallel) {
        std::vector<std::future<bool>> futures;
        futures.reserve(indices.size());
        for (unsigned long long i : indices)
            futures.push_back(std::async(std::launch::async, verifyOne, i));
        for (std::size_t k = 0; k < futures.size(); ++k) ok[k] = futures[k].get();
    } else {
        for (std::size_t k = 0; k < indices.size(); ++k) ok[k] = verifyOne(indices[k]);
    }

    std::size_t passed = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        std::cout << "i = " << indices[k] << ": " << (ok[k] ? "residual = 0" : "RESIDUAL NONZERO")
                  << "\n";
        if (ok[k]) ++passed;
    }
    std::cout << passed << "/" << indices.size() << " indices up to " << maxI
              << " solve the equation exactly\n";
    return passed == indices.size() ? 0 : 1;
}

int cmdEnumerate(std::size_t k, const std::string& format) {
    const auto indices = admissibleIndices(k);
    if (format == "json") {
        json j = json::array();
        for (auto i : indices) j.push_back(i);
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t p = 0; p < indices.size(); ++p)
            std::cout << indices[p] << (p + 1 < indices.size() ? " " : "\n");
    }
    return 0;
}

int cmdEta(unsigned long long maxExponent, const std::string& format) {
    const EtaSeries series = eta24Expansion(maxExponent);
    if (format == "json")
        std::cout << to_json(series).dump() << "\n";
    else
        std::cout << to_text(series) << "\n";
    return 0;
}

int cmdCoefficient(const std::string& lambdaText, const std::string& format) {
    const Rational lambda = parse_rational(lambdaText);
    const numeric::X13Result result = numeric::x13Coefficient(lambda);
    if (format == "json") {
        json j;
        j["lambda"] = to_string(lambda);
        switch (result.kind) {
            case numeric::X13Result::Kind::zero_by_pole:
                j["classification"] = "zero-by-pole";
                j["coefficient"] = 0.0;
                break;
            case numeric::X13Result::Kind::formula_invalid:
                j["classification"] = "formula-invalid";
                break;
            case numeric::X13Result::Kind::value:
                j["classification"] = "nonzero";
                j["coefficient"] = result.value;
                break;
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    switch (result.kind) {
        case numeric::X13Result::Kind::zero_by_pole:
            std::cout << "zero-by-pole (admissible branch): coefficient = 0\n";
            break;
        case numeric::X13Result::Kind::formula_invalid:
            std::cout << "formula-invalid (admissible branch): expansion does not apply\n";
            break;
        case numeric::X13Result::Kind::value:
            std::printf("coefficient = %.17g: nonzero => not rational\n", result.value);
            break;
    }
    return 0;
}

int cmdOracleCheck(unsigned long long i, const std::string& xText, double tol) {
    const AdmissibleIndex index(i);
    const Rational x0 = parse_rational(xText);
    if (!(x0 > 0 && x0 < Rational(1, 432)))
        throw std::domain_error("x must lie in (0, 1/432) so the Ferrers argument stays in (-1, 1)");
    const double x0d = x0.convert_to<double>();
    const double y0 = -1.0 + 864.0 * x0d;
    const double mu = static_cast<double>(i) / 6.0;
    const double fy = numeric::ferrersP(5.0 / 6.0, mu, y0) / numeric::ferrersP(-1.0 / 6.0, mu, y0);
    const double numericValue =
        (-5.0 + 4320.0 * x0d + (static_cast<double>(i) - 5.0) * fy) / 12.0;

    const RationalFunction r = solution(index);
    bool pole = false;
    double exactValue = 0.0;
    try {
        exactValue = r.evaluate(x0).convert_to<double>();
    } catch (const std::domain_error&) {
        pole = true;
    }

    bool agree;
    if (pole) {
        // Both sides diverge at a pole of r; compare reciprocals instead.
        agree = std::fabs(1.0 / numericValue) <= tol;
        std::cout << "exact = pole, numeric = " << numericValue << " (1/numeric = "
                  << 1.0 / numericValue << ")\n";
    } else {
        const double diff = std::fabs(exactValue - numericValue);
        agree = std::fabs(exactValue) < 1e-3
                    ? diff <= tol
                    : diff <= tol * std::max(std::fabs(exactValue), std::fabs(numericValue));
        std::cout << "exact = " << to_string(r.evaluate(x0)) << " = " << exactValue
                  << ", numeric = " << numericValue << "\n";
    }
    std::cout << (agree ? "agree" : "DISAGREE") << " (tol = " << tol << ")\n";
    return agree ? 0 : 1;
}

int cmdAdmissible(const std::string& lambdaText) {
    const Rational lambda = parse_rational(lambdaText);
    if (const auto witness = isAdmissible(lambda)) {
        std::cout << "admissible: 144*lambda = " << BigInt(*witness * *witness).str() << " = "
                  << witness->str() << "^2, gcd(" << witness->str() << ", 6) = 1\n";
        return 0;
    }
    std::cout << "not admissible: 144*lambda is not the square of an integer prime to 6\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational solutions of the Riccati equation on elliptic curves"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "latex"};

    unsigned long long constructI = 0;
    std::string constructFormat = "text";
    auto* construct = app.add_subcommand("construct", "Build r(x, i^2/144) in closed form");
    construct->add_option("--i", constructI, "admissible index")->required();
    construct->add_option("--format", constructFormat)->check(CLI::IsMember(formats));

    unsigned long long verifyI = 0;
    std::string verifyLambda;
    auto* verify = app.add_subcommand("verify", "Check the Riccati residual of r(x, i^2/144)");
    verify->add_option("--i", verifyI, "admissible index")->required();
    verify->add_option("--lambda", verifyLambda, "override lambda (p/q) to test a mismatch");

    unsigned long long maxI = 0;
    bool parallel = false;
    auto* verifyAll = app.add_subcommand("verify-all", "Verify every admissible index up to a bound");
    verifyAll->add_option("--max-i", maxI, "largest index to test")->required();
    verifyAll->add_flag("--parallel", parallel, "fan out over worker threads");

    std::size_t enumerateK = 0;
    std::string enumerateFormat = "text";
    auto* enumerate = app.add_subcommand("enumerate", "List the first k admissible indices");
    enumerate->add_option("--k", enumerateK, "how many indices")->required();
    enumerate->add_option("--format", enumerateFormat)->check(CLI::IsMember(formats));

    unsigned long long etaMax = 0;
    std::string etaFormat = "text";
    auto* eta = app.add_subcommand("eta", "Expand eta(q^24) through a maximal exponent");
    eta->add_option("--max-exponent", etaMax, "inclusive exponent bound")->required();
    eta->add_option("--format", etaFormat)->check(CLI::IsMember(formats));

    std::string coefLambda;
    std::string coefFormat = "text";
    auto* coefficient =
        app.add_subcommand("coefficient", "Classify lambda by the x^(1/3) expansion coefficient");
    coefficient->add_option("--lambda", coefLambda, "rational lambda, p/q")->required();
    coefficient->add_option("--format", coefFormat)->check(CLI::IsMember(formats));

    unsigned long long oracleI = 0;
    std::string oracleX;
    double oracleTol = numeric::configFromEnv().check_tol;
    auto* oracleCheck =
        app.add_subcommand("oracle-check", "Compare exact and Ferrers-based evaluations of r");
    oracleCheck->add_option("--i", oracleI, "admissible index")->required();
    oracleCheck->add_option("--x", oracleX, "sample point in (0, 1/432), p/q")->required();
    oracleCheck->add_option("--tol", oracleTol, "agreement tolerance");

    std::string admissibleLambda;
    auto* admissible = app.add_subcommand("admissible", "Decide admissibility of a rational lambda");
    admissible->add_option("--lambda", admissibleLambda, "rational lambda, p/q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*construct) return cmdConstruct(constructI, constructFormat);
        if (*verify)
            return cmdVerify(verifyI, verifyLambda.empty()
                                          ? std::nullopt
                                          : std::optional<std::string>(verifyLambda));
        if (*verifyAll) return cmdVerifyAll(maxI, parallel);
        if (*enumerate) return cmdEnumerate(enumerateK, enumerateFormat);
        if (*eta) return cmdEta(etaMax, etaFormat);
        if (*coefficient) return cmdCoefficient(coefLambda, coefFormat);
        if (*oracleCheck) return cmdOracleCheck(oracleI, oracleX, oracleTol);
        if (*admissible) return cmdAdmissible(admissibleLambda);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
