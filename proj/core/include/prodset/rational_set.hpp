#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "prodset/rational.hpp"

namespace prodset {

// A finite set of positive rationals, stored strictly increasing by value.
// Immutable after construction; all operations return new sets.
class RationalSet {
public:
    RationalSet() = default;

    // Sorts and deduplicates.
    static RationalSet of(std::vector<ReducedFraction> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const ReducedFraction& f) const;

    std::span<const ReducedFraction> elements() const { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool operator==(const RationalSet& other) const = default;

private:
    explicit RationalSet(std::vector<ReducedFraction> sorted)
        : elements_(std::move(sorted)) {}

    std::vector<ReducedFraction> elements_;
};

// F_{Q,Q'}: all reduced a/b with 1 <= a <= Q, 1 <= b <= Q', gcd(a,b)=1.
// Throws capacity_error when floor(Q)*floor(Q') exceeds candidate_cap.
RationalSet enumerate_farey(const FareyParams& p,
                            std::uint64_t candidate_cap = 100'000'000);

// {a*b : a in A, b in B}.  Pair blocks may run in parallel; output is
// canonical regardless of worker count.
RationalSet product_set(const RationalSet& a, const RationalSet& b);

// {a/b : a in A, b in B}.
RationalSet quotient_set(const RationalSet& a, const RationalSet& b);

// {1/b : b in B}; same cardinality.
RationalSet reciprocal_set(const RationalSet& b);

// Uniform k-subset of F_{Q,Q'}, deterministic for a fixed seed.
RationalSet random_subset(const FareyParams& p, std::size_t k, std::uint64_t seed);

// Text format: one rational per line as "p/q" or "p"; '#' lines are
// comments; surrounding whitespace ignored.  Input is reduced and
// deduplicated on read.
RationalSet read_rational_set(std::istream& in);
void write_rational_set(std::ostream& out, const RationalSet& s);

}  // namespace prodset
