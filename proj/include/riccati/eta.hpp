#pragma once

// The modular side of the classification: the Dirichlet character chi mod 12
// and the sparse q-expansion
//
//   eta(q^24) = sum_{n >= 1} chi(n) q^{n^2} = q - q^25 - q^49 + q^121 + ...
//
// whose exponents are precisely the squares of integers coprime to 6, i.e.
// the values 144 lambda of the admissible lambda.

#include <stdexcept>
#include <utility>
#include <vector>

namespace riccati {

/// chi mod 12: +1 at +-1, -1 at +-5, zero off the units.
inline int chi(long long n) {
    const long long r = ((n % 12) + 12) % 12;
    if (r == 1 || r == 11) return 1;
    if (r == 5 || r == 7) return -1;
    return 0;
}

struct EtaSeries {
    // exponent -> coefficient, ascending; every coefficient is +-1.
    std::vector<std::pair<unsigned long long, int>> terms;
    unsigned long long max_exponent;
};

/// All terms chi(n) q^{n^2} with n^2 <= maxExponent.
inline EtaSeries eta24Expansion(unsigned long long maxExponent) {
    if (maxExponent == 0) throw std::invalid_argument("max exponent must be positive");
    EtaSeries series{{}, maxExponent};
    unsigned long long n = 1;
    while (n <= 0xFFFFFFFFull && n * n <= maxExponent) {
        series.terms.emplace_back(n * n, chi(static_cast<long long>(n)));
        n += (n % 6 == 1) ? 4 : 2;
    }
    return series;
}

/// k-th exponent of the expansion: n_k^2 for n_k the k-th positive integer
/// coprime to 6.
inline unsigned long long kthExponent(std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    const unsigned long long n = (k % 2 == 1) ? 3 * (k - 1) + 1 : 3 * (k - 2) + 5;
    return n * n;
}

}  // namespace riccati
