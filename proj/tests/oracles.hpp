#pragma once

// Independent brute-force oracles for the test suites.  Nothing here may
// call into the code paths it is used to check.

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "prodset/rational.hpp"
#include "prodset/rational_set.hpp"

namespace oracles {

// Euler phi for 1..n by a sieve.
inline std::vector<std::uint64_t> totient_sieve(std::uint64_t n) {
    std::vector<std::uint64_t> phi(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) phi[i] = i;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (phi[p] != p) continue;  // p composite
        for (std::uint64_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
    }
    return phi;
}

// #{(a,b) : 1 <= a,b <= q, gcd(a,b)=1} by direct gcd filtering.
inline std::uint64_t coprime_pair_count(std::uint64_t q) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= q; ++a)
        for (std::uint64_t b = 1; b <= q; ++b)
            if (std::gcd(a, b) == 1) ++count;
    return count;
}

// Quotient-set size via a plain set of cross-multiplied pairs, no
// ReducedFraction arithmetic involved.
inline std::uint64_t quotient_size_brute(const prodset::RationalSet& a,
                                         const prodset::RationalSet& b) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> values;
    for (const auto& f : a)
        for (const auto& g : b) {
            std::uint64_t num = f.num() * g.den();
            std::uint64_t den = f.den() * g.num();
            std::uint64_t d = std::gcd(num, den);
            values.insert({num / d, den / d});
        }
    return values.size();
}

inline std::uint64_t product_size_brute(const prodset::RationalSet& a,
                                        const prodset::RationalSet& b) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> values;
    for (const auto& f : a)
        for (const auto& g : b) {
            std::uint64_t num = f.num() * g.num();
            std::uint64_t den = f.den() * g.den();
            std::uint64_t d = std::gcd(num, den);
            values.insert({num / d, den / d});
        }
    return values.size();
}

// tau by exhaustive divisor testing.
inline std::uint64_t tau_brute(std::uint64_t m) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= m; ++d)
        if (m % d == 0) ++count;
    return count;
}

// Number of (element, (r,s)) incidences with r | num and s | den, by double
// loop over candidate divisors.
inline std::uint64_t membership_incidences_brute(const prodset::RationalSet& s) {
    std::uint64_t total = 0;
    for (const auto& f : s)
        for (std::uint64_t r = 1; r <= f.num(); ++r)
            for (std::uint64_t d = 1; d <= f.den(); ++d)
                if (f.num() % r == 0 && f.den() % d == 0) ++total;
    return total;
}

}  // namespace oracles
