#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "prodset/errors.hpp"

namespace prodset {

// A positive rational in lowest terms.  Numerator and denominator live in
// the unsigned 64-bit range; every arithmetic operation either returns an
// exact result or throws capacity_error.  Never wraps.
class ReducedFraction {
public:
    // Reduces num/den.  Zero arguments are a domain_error: the universe is
    // strictly positive rationals.
    static ReducedFraction reduce(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    ReducedFraction times(const ReducedFraction& other) const;
    ReducedFraction over(const ReducedFraction& other) const;
    ReducedFraction inverted() const { return ReducedFraction(den_, num_); }

    bool operator==(const ReducedFraction& other) const = default;

    // Order by rational value; cross products are compared in 128 bits so
    // the full 64-bit range is safe.
    std::strong_ordering operator<=>(const ReducedFraction& other) const;

    std::string str() const;

    // Parses "p/q" or "p" (den = 1).  Reduces.  Whitespace is the caller's
    // problem; see read_rational_set for the file format.
    static ReducedFraction parse(std::string_view text);

private:
    ReducedFraction(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {}

    std::uint64_t num_;
    std::uint64_t den_;
};

// Height bounds Q, Q' for the universe of rationals q/q' with q <= Q,
// q' <= Q'.  Real-valued, as the bounds are; enumeration floors them.
class FareyParams {
public:
    // Requires Q, Q' >= 1 and Q*Q' <= 2^31 so that quotient-set elements
    // (numerators and denominators up to QQ') compare within 2^62.
    FareyParams(double q, double qprime);

    double q() const { return q_; }
    double qprime() const { return qprime_; }
    double qq() const { return q_ * qprime_; }

private:
    double q_;
    double qprime_;
};

bool in_farey(const ReducedFraction& f, const FareyParams& p);

}  // namespace prodset
