#include "prodset/decomposition.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "prodset/errors.hpp"
#include "prodset/parallel.hpp"
#include "prodset/tau.hpp"

namespace prodset {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d * d != m) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// (r,s) -> #{f in S : r | num, s | den}, over all divisor pairs.
std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>
membership_pairs(const RationalSet& s) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> out;
    for (const auto& f : s)
        for (std::uint64_t r : divisors(f.num()))
            for (std::uint64_t d : divisors(f.den())) ++out[{r, d}];
    return out;
}

}  // namespace

GcdClass::GcdClass(std::uint64_t r, std::uint64_t s) : r(r), s(s) {
    if (r < 1 || s < 1 || std::gcd(r, s) != 1)
        throw domain_error("GcdClass requires coprime positive (r,s), got (" +
                           std::to_string(r) + "," + std::to_string(s) + ")");
}

GcdClass gcd_class(const ReducedFraction& a, const ReducedFraction& b) {
    return GcdClass(std::gcd(a.num(), b.num()), std::gcd(a.den(), b.den()));
}

std::uint64_t DecompositionTable::members_a(std::uint64_t r, std::uint64_t s) const {
    auto it = pairs_a_.find({r, s});
    return it == pairs_a_.end() ? 0 : it->second;
}

std::uint64_t DecompositionTable::members_b(std::uint64_t r, std::uint64_t s) const {
    auto it = pairs_b_.find({r, s});
    return it == pairs_b_.end() ? 0 : it->second;
}

std::uint64_t DecompositionTable::tail_product_sum(double x) const {
    std::uint64_t sum = 0;
    for (const auto& [key, na] : pairs_a_) {
        if (std::gcd(key.first, key.second) != 1) continue;
        if (!(static_cast<double>(key.first * key.second) > x)) continue;
        sum += na * members_b(key.first, key.second);
    }
    return sum;
}

std::uint64_t DecompositionTable::tail_max_product(double x) const {
    std::uint64_t best = 0;
    for (const auto& [key, na] : pairs_a_) {
        if (std::gcd(key.first, key.second) != 1) continue;
        if (!(static_cast<double>(key.first * key.second) > x)) continue;
        best = std::max(best, na * members_b(key.first, key.second));
    }
    return best;
}

DecompositionTable decompose(const RationalSet& a, const RationalSet& b,
                             std::uint64_t pair_cap) {
    if (a.size() * b.size() > pair_cap)
        throw capacity_error("decompose: " + std::to_string(a.size() * b.size()) +
                             " pairs exceed the cap of " + std::to_string(pair_cap));
    DecompositionTable t;
    t.card_a_ = a.size();
    t.card_b_ = b.size();
    t.pairs_a_ = membership_pairs(a);
    t.pairs_b_ = membership_pairs(b);

    auto ea = a.elements();
    auto eb = b.elements();
    std::size_t workers = std::min(worker_count(), a.size() ? a.size() : std::size_t{1});
    std::vector<std::map<GcdClass, std::uint64_t>> partial(workers ? workers : 1);
    parallel_chunks(a.size(), [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto& mine = partial[w];
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& bf : eb) ++mine[gcd_class(ea[i], bf)];
    });
    for (const auto& part : partial)
        for (const auto& [cls, n] : part) t.realized_[cls].count_m += n;
    for (auto& [cls, counts] : t.realized_) {
        counts.count_a = t.members_a(cls.r, cls.s);
        counts.count_b = t.members_b(cls.r, cls.s);
    }
    return t;
}

RationalSet subset_by_class(const RationalSet& s, const GcdClass& c) {
    std::vector<ReducedFraction> out;
    for (const auto& f : s)
        if (f.num() % c.r == 0 && f.den() % c.s == 0) out.push_back(f);
    return RationalSet::of(std::move(out));
}

RationalSet divide_out_class(const RationalSet& s, const GcdClass& c) {
    std::vector<ReducedFraction> out;
    out.reserve(s.size());
    for (const auto& f : s) {
        if (f.num() % c.r != 0 || f.den() % c.s != 0)
            throw domain_error("divide_out_class: " + f.str() +
                               " not divisible by class (" + std::to_string(c.r) +
                               "," + std::to_string(c.s) + ")");
        out.push_back(ReducedFraction::reduce(f.num() / c.r, f.den() / c.s));
    }
    return RationalSet::of(std::move(out));
}

std::uint64_t representation_count(const RationalSet& a, const RationalSet& b,
                                   const ReducedFraction& target, const GcdClass& c) {
    std::uint64_t count = 0;
    for (const auto& af : a)
        for (const auto& bf : b)
            if (gcd_class(af, bf) == c && af.over(bf) == target) ++count;
    return count;
}

std::uint64_t membership_sum(const RationalSet& s) {
    std::uint64_t sum = 0;
    for (const auto& f : s)
        sum += static_cast<std::uint64_t>(tau_direct(f.num())) * tau_direct(f.den());
    return sum;
}

std::uint64_t lattice_pair_count(double x) {
    if (!(x >= 1.0)) throw domain_error("lattice_pair_count: requires x >= 1");
    auto n = static_cast<std::uint64_t>(std::floor(x));
    std::uint64_t count = 0;
    for (std::uint64_t r = 1; r <= n; ++r) {
        // largest s with r*s <= x; start from the float guess and correct
        auto s = static_cast<std::uint64_t>(x / static_cast<double>(r));
        while (static_cast<double>((s + 1) * r) <= x) ++s;
        while (s > 0 && static_cast<double>(s * r) > x) --s;
        count += s;
    }
    return count;
}

}  // namespace prodset
