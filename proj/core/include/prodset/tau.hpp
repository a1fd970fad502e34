#pragma once

#include <cstdint>
#include <vector>

#include "prodset/errors.hpp"

namespace prodset {

// Divisor counts tau(m) for 1 <= m <= N together with the running maximum
// T(x) = max_{m<=x} tau(m).  Built once per run at the largest needed limit
// and shared read-only.
class TauTable {
public:
    // Divisor-marking sieve.  N <= 10^8.
    static TauTable build(std::uint64_t limit);

    std::uint64_t limit() const { return tau_.size() - 1; }

    std::uint32_t tau(std::uint64_t m) const;

    // T(x) for real x >= 1; floors x, since T is a max over integers m <= x.
    std::uint32_t tau_max(double x) const;

    // Smallest m <= x attaining T(x).
    std::uint64_t tau_argmax(double x) const;

private:
    TauTable() = default;
    std::vector<std::uint32_t> tau_;   // tau_[0] unused
    std::vector<std::uint32_t> tmax_;
    std::vector<std::uint64_t> targ_;  // first attaining m per prefix
};

// tau by trial division; independent of the sieve, used as its oracle.
std::uint32_t tau_direct(std::uint64_t m);

// The classical divisor-bound curve exp(log 2 * log x / log log x) with the
// o(1) dropped.  Reference only, never part of a certified inequality;
// callers must label it as non-rigorous.  Requires x > e^e.
double divisor_bound_reference(double x);

}  // namespace prodset
