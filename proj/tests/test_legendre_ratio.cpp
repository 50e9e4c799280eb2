#include <riccati/legendre_ratio.hpp>
#include <riccati/numeric/ferrers.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace riccati;

namespace {

RationalFunction overY(Polynomial num, Polynomial den) {
    return RationalFunction::normalized(num, den);
}

const Polynomial y = Polynomial::variable();

}  // namespace

TEST_CASE("single order-raising steps") {
    SECTION("from the first base case") {
        const RatioState start{Rational(-1, 6), Rational(1, 6), RationalFunction(y)};
        const RatioState next = ratioStep(start);
        REQUIRE(next.m == Rational(7, 6));
        // coefficients n+m+1 = 1, n-m+1 = 2/3 give (3 - 2y^2)/y
        REQUIRE(next.f == overY(Polynomial{Rational(3), Rational(0), Rational(-2)}, y));
    }
    SECTION("from the second base case") {
        const RatioState start{Rational(-1, 6), Rational(11, 6),
                               RationalFunction(Polynomial(Rational(1)), y)};
        const RatioState next = ratioStep(start);
        REQUIRE(next.m == Rational(17, 6));
        // coefficients n+m+1 = 8/3, n-m+1 = -1 give 11y/(3 + 8y^2)
        REQUIRE(next.f == overY(Rational(11) * y,
                                Polynomial{Rational(3), Rational(0), Rational(8)}));
    }
    SECTION("the lemma needs n different from m") {
        const RatioState bad{Rational(1, 2), Rational(1, 2), RationalFunction(y)};
        REQUIRE_THROWS_AS(ratioStep(bad), std::invalid_argument);
    }
}

TEST_CASE("base-case ratios") {
    REQUIRE(legendreRatio(AdmissibleIndex(1)) == RationalFunction(y));
    REQUIRE(legendreRatio(AdmissibleIndex(11)) == RationalFunction(Polynomial(Rational(1)), y));
}

TEST_CASE("iterated ratios") {
    REQUIRE(legendreRatio(AdmissibleIndex(7)) ==
            overY(Polynomial{Rational(3), Rational(0), Rational(-2)}, y));
    REQUIRE(legendreRatio(AdmissibleIndex(17)) ==
            overY(Rational(11) * y, Polynomial{Rational(3), Rational(0), Rational(8)}));
    // two steps from the first base case
    REQUIRE(legendreRatio(AdmissibleIndex(13)) ==
            overY(Polynomial{Rational(0), Rational(9), Rational(0), Rational(-2)},
                  Polynomial{Rational(3), Rational(0), Rational(4)}));
}

TEST_CASE("excluded indices") {
    REQUIRE_THROWS_AS(legendreRatio(AdmissibleIndex(5)), std::domain_error);
    REQUIRE_THROWS_AS(AdmissibleIndex(2), std::invalid_argument);
    REQUIRE_THROWS_AS(AdmissibleIndex(9), std::invalid_argument);
    REQUIRE_THROWS_AS(AdmissibleIndex(0), std::invalid_argument);
}

TEST_CASE("recomputation yields structurally identical forms") {
    for (unsigned long long i : {7ull, 19ull, 25ull, 35ull}) {
        REQUIRE(legendreRatio(AdmissibleIndex(i)) == legendreRatio(AdmissibleIndex(i)));
    }
}

TEST_CASE("both production paths stay nondegenerate to the test bound") {
    for (unsigned long long i = 1; i <= 199; i += (i % 6 == 1) ? 4 : 2) {
        if (i == 5) continue;
        REQUIRE_NOTHROW(legendreRatio(AdmissibleIndex(i)));
    }
}

TEST_CASE("exact ratios match the Ferrers oracle at sample points") {
    const double samples[] = {-0.5, 0.0, 0.25, 0.5};
    const Rational exactSamples[] = {Rational(-1, 2), Rational(0), Rational(1, 4), Rational(1, 2)};
    for (unsigned long long i = 1; i <= 25; i += (i % 6 == 1) ? 4 : 2) {
        if (i == 5) continue;
        const RationalFunction f = legendreRatio(AdmissibleIndex(i));
        const double mu = static_cast<double>(i) / 6.0;
        for (int s = 0; s < 4; ++s) {
            Rational exact;
            try {
                exact = f.evaluate(exactSamples[s]);
            } catch (const std::domain_error&) {
                continue;  // sample sits on a pole of the ratio
            }
            const double reference = numeric::ferrersP(5.0 / 6.0, mu, samples[s]) /
                                     numeric::ferrersP(-1.0 / 6.0, mu, samples[s]);
            const double exactD = exact.convert_to<double>();
            const double diff = std::fabs(exactD - reference);
            if (std::fabs(reference) < 1e-3) {
                REQUIRE(diff < 1e-10);
            } else {
                REQUIRE(diff / std::fabs(reference) < 1e-8);
            }
        }
    }
}
