#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodset/rational_set.hpp"
#include "prodset/tau.hpp"

namespace prodset {

// |A||B| / (2 T^2 x (1+ln x)).  Pure formula; the tail hypothesis that makes
// it a valid lower bound on |A/B| is the caller's to check.
double conditional_bound(std::uint64_t card_a, std::uint64_t card_b,
                         std::uint32_t t, double x);

// |A||B| / ((4T)^{n+1} (QQ')^{1/n} (1+ln(QQ'))), n >= 1.  Certified lower
// bound on |A/B| for A,B in F_{Q,Q'} with T = T(QQ').
double lemma_bound(std::uint64_t card_a, std::uint64_t card_b,
                   const FareyParams& p, std::uint32_t n, std::uint32_t t);

// Exhaustive argmax of lemma_bound over n in [1, n_max]; ties toward
// smaller n.
struct BestLevel {
    std::uint32_t n;
    double bound;
};
BestLevel best_n(std::uint64_t card_a, std::uint64_t card_b, const FareyParams& p,
                 std::uint32_t t, std::uint32_t n_max);

// Default scan ceiling: beyond ceil(ln QQ') the (4T)^{n+1} factor strictly
// dominates the (QQ')^{1/n} gain.
std::uint32_t default_n_max(const FareyParams& p);

// The three asymptotic bounds with o(1) set to 0.  Reference curves only,
// never certified; requires the log-log argument to be positive.
double theorem1_reference(std::uint64_t card_a, std::uint64_t card_b,
                          const FareyParams& p);
double theoremA_reference(std::uint64_t card_a, std::uint64_t card_b, double q);
double corollary_reference(std::uint64_t card_a, std::uint64_t card_b, double q);

// Everything evaluated against the exact quotient-set size for one instance.
struct BoundReport {
    double q = 0;
    double qprime = 0;
    std::uint64_t card_a = 0;
    std::uint64_t card_b = 0;
    std::uint32_t t_qq = 0;
    std::uint64_t actual_quotient = 0;
    std::optional<std::uint64_t> actual_product;  // filled on request
    std::vector<double> lemma_bounds;             // index i holds n = i+1
    std::uint32_t best_n = 0;
    double best_bound = 0;
    // NaN when QQ' (or Q) is too small for the formula's domain.
    double thm1_ref = 0;
    double thmA_ref = 0;
    double cor_ref = 0;

    // Flat JSON object with the fixed field names; reals with 17 significant
    // digits, matching the CSV.
    std::string to_json() const;
    static std::string csv_header(std::uint32_t n_max);
    std::string to_csv_row() const;
};

// Runs the whole battery.  Asserts lemma_bound(n) <= |A/B| for every n in
// range; a violation is a bug in this codebase, reported as
// certification_error.
BoundReport compare_actual(const RationalSet& a, const RationalSet& b,
                           const FareyParams& p, const TauTable& table,
                           std::uint32_t n_max, bool with_product = false);

}  // namespace prodset
