#pragma once

#include <cstdint>
#include <string>

#include "prodset/rational_set.hpp"

namespace prodset {

enum class Objective { Quotient, Product };

struct SearchResult {
    std::uint64_t objective = 0;
    RationalSet witness_a;
    RationalSet witness_b;
    double q = 1;
    double qprime = 1;
    std::size_t k = 0;
    std::string method;  // exhaustive | construction | local

    std::string to_json() const;
};

// Global minimum of the objective over k-subsets of F_{Q,Q'} (A = B when
// symmetric, independent A and B otherwise).  Capacity error when the
// number of candidate subsets (pairs of subsets in the asymmetric case)
// exceeds 10^7; use local_search_min instead at that scale.
SearchResult exhaustive_min(const FareyParams& p, std::size_t k,
                            Objective objective, bool symmetric);

// {start * ratio^i : 0 <= i < k}; domain error if any element leaves
// F_{Q,Q'}.
RationalSet geometric_construction(const FareyParams& p,
                                   const ReducedFraction& start,
                                   const ReducedFraction& ratio, std::size_t k);

// The k smallest-height elements of F_{Q,Q'} whose numerator and denominator
// are smooth_bound-smooth (height = max(num, den), ties by value).
RationalSet smooth_construction(const FareyParams& p, std::uint64_t smooth_bound,
                                std::size_t k);

// Swap-neighborhood hill climbing over symmetric k-subsets (A = B) with
// restarts: one geometric-seeded start, one 2-smooth-seeded start, the rest
// random.  Deterministic for a fixed seed.
SearchResult local_search_min(const FareyParams& p, std::size_t k,
                              Objective objective, std::size_t iters,
                              std::uint64_t seed, std::size_t restarts = 8);

}  // namespace prodset
