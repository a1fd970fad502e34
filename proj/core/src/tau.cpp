#include "prodset/tau.hpp"

#include <cmath>
#include <string>

namespace prodset {

TauTable TauTable::build(std::uint64_t limit) {
    if (limit < 1) throw domain_error("TauTable: limit must be >= 1");
    if (limit > 100'000'000)
        throw capacity_error("TauTable: limit " + std::to_string(limit) +
                             " exceeds the 10^8 memory cap");
    TauTable t;
    t.tau_.assign(limit + 1, 0);
    for (std::uint64_t d = 1; d <= limit; ++d)
        for (std::uint64_t m = d; m <= limit; m += d) ++t.tau_[m];
    t.tmax_.assign(limit + 1, 0);
    t.targ_.assign(limit + 1, 0);
    std::uint32_t best = 0;
    std::uint64_t best_at = 1;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (t.tau_[m] > best) {
            best = t.tau_[m];
            best_at = m;
        }
        t.tmax_[m] = best;
        t.targ_[m] = best_at;
    }
    return t;
}

std::uint32_t TauTable::tau(std::uint64_t m) const {
    if (m < 1 || m > limit())
        throw domain_error("tau: argument " + std::to_string(m) + " outside table");
    return tau_[m];
}

std::uint32_t TauTable::tau_max(double x) const {
    if (!(x >= 1.0) || x > static_cast<double>(limit()))
        throw domain_error("tau_max: argument outside table limit " +
                           std::to_string(limit()));
    return tmax_[static_cast<std::uint64_t>(std::floor(x))];
}

std::uint64_t TauTable::tau_argmax(double x) const {
    if (!(x >= 1.0) || x > static_cast<double>(limit()))
        throw domain_error("tau_argmax: argument outside table");
    return targ_[static_cast<std::uint64_t>(std::floor(x))];
}

std::uint32_t tau_direct(std::uint64_t m) {
    if (m < 1) throw domain_error("tau_direct: argument must be >= 1");
    std::uint32_t count = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        count += (d * d == m) ? 1 : 2;
    }
    return count;
}

double divisor_bound_reference(double x) {
    static const double e_to_e = std::exp(std::exp(1.0));
    if (!(x > e_to_e))
        throw domain_error("divisor_bound_reference: requires x > e^e");
    return std::exp(std::log(2.0) * std::log(x) / std::log(std::log(x)));
}

}  // namespace prodset
