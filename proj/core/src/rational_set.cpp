#include "prodset/rational_set.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "prodset/errors.hpp"
#include "prodset/parallel.hpp"
#include "prodset/rng.hpp"

namespace prodset {

namespace {

RationalSet combine(const RationalSet& a, const RationalSet& b, bool divide) {
    std::vector<ReducedFraction> out(a.size() * b.size(),
                                     ReducedFraction::reduce(1, 1));
    auto ea = a.elements();
    auto eb = b.elements();
    parallel_chunks(a.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < eb.size(); ++j)
                out[i * eb.size() + j] = divide ? ea[i].over(eb[j]) : ea[i].times(eb[j]);
    });
    return RationalSet::of(std::move(out));
}

}  // namespace

RationalSet RationalSet::of(std::vector<ReducedFraction> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return RationalSet(std::move(elements));
}

bool RationalSet::contains(const ReducedFraction& f) const {
    return std::binary_search(elements_.begin(), elements_.end(), f);
}

RationalSet enumerate_farey(const FareyParams& p, std::uint64_t candidate_cap) {
    auto qmax = static_cast<std::uint64_t>(std::floor(p.q()));
    auto qpmax = static_cast<std::uint64_t>(std::floor(p.qprime()));
    if (qmax * qpmax > candidate_cap)
        throw capacity_error("enumerate_farey: " + std::to_string(qmax * qpmax) +
                             " candidate pairs exceed the cap of " +
                             std::to_string(candidate_cap));
    std::vector<ReducedFraction> out;
    for (std::uint64_t a = 1; a <= qmax; ++a)
        for (std::uint64_t b = 1; b <= qpmax; ++b)
            if (std::gcd(a, b) == 1) out.push_back(ReducedFraction::reduce(a, b));
    return RationalSet::of(std::move(out));
}

RationalSet product_set(const RationalSet& a, const RationalSet& b) {
    return combine(a, b, /*divide=*/false);
}

RationalSet quotient_set(const RationalSet& a, const RationalSet& b) {
    return combine(a, b, /*divide=*/true);
}

RationalSet reciprocal_set(const RationalSet& b) {
    std::vector<ReducedFraction> out;
    out.reserve(b.size());
    for (const auto& f : b) out.push_back(f.inverted());
    return RationalSet::of(std::move(out));
}

RationalSet random_subset(const FareyParams& p, std::size_t k, std::uint64_t seed) {
    RationalSet universe = enumerate_farey(p);
    if (k > universe.size())
        throw domain_error("random_subset: k=" + std::to_string(k) +
                           " exceeds |F| = " + std::to_string(universe.size()));
    std::vector<ReducedFraction> pool(universe.begin(), universe.end());
    auto rng = make_rng(seed);
    // Partial Fisher-Yates over the canonical ordering.
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end());
    return RationalSet::of(std::move(pool));
}

RationalSet read_rational_set(std::istream& in) {
    std::vector<ReducedFraction> out;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string_view body(line.data() + first, last - first + 1);
        if (body.front() == '#') continue;
        out.push_back(ReducedFraction::parse(body));
    }
    return RationalSet::of(std::move(out));
}

void write_rational_set(std::ostream& out, const RationalSet& s) {
    for (const auto& f : s) out << f.str() << '\n';
}

}  // namespace prodset
