#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "prodset/bounds.hpp"
#include "prodset/rational_set.hpp"
#include "prodset/tau.hpp"

namespace prodset {

// One node of the induction trace behind the level-n lower bound on |A/B|.
//
// RECURSE nodes witness a gcd class (r,s) whose subsets are large enough to
// recurse on (the recorded lhs7 >= rhs7); TAIL leaves witness that the tail
// sum over classes with rs > x is at most |A||B|/2, so the conditional bound
// applies; BASE leaves carry the trivial level-1 bound |A||B|/(QQ').
struct CertificateNode {
    enum class Branch { Base, Recurse, Tail };

    std::uint32_t level = 1;
    double q = 1;
    double qprime = 1;
    std::uint64_t card_a = 0;
    std::uint64_t card_b = 0;
    std::uint32_t t_local = 1;  // T(QQ') of this node's own instance
    Branch branch = Branch::Base;

    // RECURSE only.
    std::uint64_t r = 0;
    std::uint64_t s = 0;
    double lhs7 = 0;  // |A_{r/s}||B_{r/s}|
    double rhs7 = 0;  // threshold the subsets must reach
    std::unique_ptr<CertificateNode> child;

    // TAIL only.
    double x = 0;
    std::uint64_t tail_sum = 0;

    double claimed_bound = 0;

    std::string to_json() const;
    static CertificateNode from_json(const std::string& text);
};

// Runs the induction as an algorithm on (A, B) in F_{Q,Q'} down from level n.
// At each level m > 1 the class maximizing lhs/rhs is recursed on when any
// class meets the threshold (ties: smaller rs, then smaller r); otherwise
// the tail branch is taken with x = T^{m-1} (QQ')^{1/m}.  Throws
// certification_error if the tail hypothesis fails where the theorem says it
// cannot.
CertificateNode certify(const RationalSet& a, const RationalSet& b,
                        const FareyParams& p, std::uint32_t n,
                        const TauTable& table);

// Independent re-check: recomputes every cardinality, branch condition and
// bound from (a, b), and compares claimed_bound against the brute-force
// quotient-set size at every node.  Returns false with a diagnostic trail.
bool validate(const CertificateNode& cert, const RationalSet& a,
              const RationalSet& b, const TauTable& table,
              std::vector<std::string>* diagnostics = nullptr);

}  // namespace prodset
