#pragma once

#include <cstdint>
#include <map>

#include "prodset/rational_set.hpp"

namespace prodset {

// The gcd class r/s of a pair (a/a', b/b'): r = gcd(a,b), s = gcd(a',b').
// For reduced fractions gcd(r,s)=1 automatically; the constructor enforces it.
struct GcdClass {
    std::uint64_t r;
    std::uint64_t s;

    GcdClass(std::uint64_t r, std::uint64_t s);

    auto operator<=>(const GcdClass&) const = default;
};

GcdClass gcd_class(const ReducedFraction& a, const ReducedFraction& b);

struct ClassCounts {
    std::uint64_t count_m = 0;  // |M(AxB, r/s)|
    std::uint64_t count_a = 0;  // |A_{r/s}|
    std::uint64_t count_b = 0;  // |B_{r/s}|
};

// Per-class pair counts for one instance (A, B), plus the per-divisor-pair
// membership counts |S_{r/s}| over ALL (r,s), coprime or not.  The realized
// map covers exactly the classes hit by some pair of A x B; the membership
// maps also cover classes with count_m = 0 but |A_{r/s}||B_{r/s}| > 0, which
// the tail sum must include.
class DecompositionTable {
public:
    const std::map<GcdClass, ClassCounts>& realized() const { return realized_; }
    std::uint64_t card_a() const { return card_a_; }
    std::uint64_t card_b() const { return card_b_; }

    // |A_{r/s}| for any divisor pair, realized or not.
    std::uint64_t members_a(std::uint64_t r, std::uint64_t s) const;
    std::uint64_t members_b(std::uint64_t r, std::uint64_t s) const;

    // Sum of |A_{r/s}||B_{r/s}| over coprime (r,s) with r*s > x.
    std::uint64_t tail_product_sum(double x) const;

    // max of |A_{r/s}||B_{r/s}| over the same range (0 if empty).
    std::uint64_t tail_max_product(double x) const;

private:
    friend DecompositionTable decompose(const RationalSet&, const RationalSet&,
                                        std::uint64_t);
    using PairKey = std::pair<std::uint64_t, std::uint64_t>;

    std::map<GcdClass, ClassCounts> realized_;
    std::map<PairKey, std::uint64_t> pairs_a_;  // (r,s) -> |A_{r/s}|
    std::map<PairKey, std::uint64_t> pairs_b_;
    std::uint64_t card_a_ = 0;
    std::uint64_t card_b_ = 0;
};

// Classifies all |A||B| pairs.  Throws capacity_error above pair_cap.
DecompositionTable decompose(const RationalSet& a, const RationalSet& b,
                             std::uint64_t pair_cap = 1'000'000'000);

// S_{r/s}: elements whose numerator r divides and denominator s divides.
RationalSet subset_by_class(const RationalSet& s, const GcdClass& c);

// Elementwise (num/r)/(den/s); requires c to divide every element.  Maps
// S_{r/s} into F_{Q/r, Q'/s}, which is what the certificate recursion needs.
RationalSet divide_out_class(const RationalSet& s, const GcdClass& c);

// Number of pairs (a,b) in M(AxB, c) with a/b == target.
std::uint64_t representation_count(const RationalSet& a, const RationalSet& b,
                                   const ReducedFraction& target, const GcdClass& c);

// Sum over q/q' in S of tau(q) tau(q') (= tau(qq') termwise, q and q' being
// coprime); also the number of (element, divisor-pair) incidences.
std::uint64_t membership_sum(const RationalSet& s);

// Exact number of ordered pairs (r,s) of positive integers with r*s <= x.
std::uint64_t lattice_pair_count(double x);

}  // namespace prodset
