#include "prodset/search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "prodset/errors.hpp"
#include "prodset/format.hpp"
#include "prodset/rng.hpp"

namespace prodset {

namespace {

constexpr double kExhaustiveCap = 1e7;

std::uint64_t evaluate(const RationalSet& a, const RationalSet& b, Objective obj) {
    return obj == Objective::Quotient ? quotient_set(a, b).size()
                                      : product_set(a, b).size();
}

RationalSet pick(const std::vector<ReducedFraction>& universe,
                 const std::vector<std::size_t>& idx) {
    std::vector<ReducedFraction> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(universe[i]);
    return RationalSet::of(std::move(out));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    double v = 1;
    for (std::size_t i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

bool lex_less(const RationalSet& a, const RationalSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_smooth(std::uint64_t m, std::uint64_t bound) {
    for (std::uint64_t d = 2; d <= bound && m > 1; ++d)
        while (m % d == 0) m /= d;
    return m == 1;
}

// Powers of two spanning k values inside the height bounds, if they fit.
RationalSet geometric_seed(const FareyParams& p, std::size_t k) {
    for (std::size_t neg = 0; neg < k; ++neg) {
        double high = std::pow(2.0, static_cast<double>(k - 1 - neg));
        double low = std::pow(2.0, static_cast<double>(neg));
        if (high <= p.q() && low <= p.qprime()) {
            std::vector<ReducedFraction> out;
            for (std::size_t i = 0; i < k; ++i) {
                std::uint64_t e = i;
                out.push_back(e >= neg
                                  ? ReducedFraction::reduce(1ULL << (e - neg), 1)
                                  : ReducedFraction::reduce(1, 1ULL << (neg - e)));
            }
            return RationalSet::of(std::move(out));
        }
    }
    return RationalSet();
}

}  // namespace

std::string SearchResult::to_json() const {
    std::ostringstream out;
    out << "{\"objective\":" << objective << ",\"method\":\"" << method
        << "\",\"q\":" << format_real(q) << ",\"qprime\":" << format_real(qprime)
        << ",\"k\":" << k << ",\"witness_a\":[";
    bool first = true;
    for (const auto& f : witness_a) {
        if (!first) out << ',';
        out << '"' << f.str() << '"';
        first = false;
    }
    out << "],\"witness_b\":[";
    first = true;
    for (const auto& f : witness_b) {
        if (!first) out << ',';
        out << '"' << f.str() << '"';
        first = false;
    }
    out << "]}";
    return out.str();
}

SearchResult exhaustive_min(const FareyParams& p, std::size_t k,
                            Objective objective, bool symmetric) {
    RationalSet universe = enumerate_farey(p);
    if (k < 1 || k > universe.size())
        throw domain_error("exhaustive_min: k must be in [1, |F|]");
    std::vector<ReducedFraction> pool(universe.begin(), universe.end());
    double subsets = binomial(pool.size(), k);
    double work = symmetric ? subsets : subsets * subsets;
    if (work > kExhaustiveCap)
        throw capacity_error("exhaustive_min: " + format_real(work) +
                             " candidate subsets exceed the 1e7 cap; "
                             "use local search");

    SearchResult best;
    best.q = p.q();
    best.qprime = p.qprime();
    best.k = k;
    best.method = "exhaustive";
    bool have = false;

    std::vector<std::size_t> ia(k);
    for (std::size_t i = 0; i < k; ++i) ia[i] = i;
    do {
        RationalSet a = pick(pool, ia);
        if (symmetric) {
            std::uint64_t v = evaluate(a, a, objective);
            // First hit in lexicographic enumeration order wins ties.
            if (!have || v < best.objective) {
                best.objective = v;
                best.witness_a = a;
                best.witness_b = a;
                have = true;
            }
        } else {
            std::vector<std::size_t> ib(k);
            for (std::size_t i = 0; i < k; ++i) ib[i] = i;
            do {
                RationalSet b = pick(pool, ib);
                std::uint64_t v = evaluate(a, b, objective);
                if (!have || v < best.objective) {
                    best.objective = v;
                    best.witness_a = a;
                    best.witness_b = b;
                    have = true;
                }
            } while (next_combination(ib, pool.size()));
        }
    } while (next_combination(ia, pool.size()));
    return best;
}

RationalSet geometric_construction(const FareyParams& p,
                                   const ReducedFraction& start,
                                   const ReducedFraction& ratio, std::size_t k) {
    if (k > 1 && ratio == ReducedFraction::reduce(1, 1))
        throw domain_error("geometric_construction: ratio 1 collapses the set");
    std::vector<ReducedFraction> out;
    ReducedFraction cur = start;
    for (std::size_t i = 0; i < k; ++i) {
        if (!in_farey(cur, p))
            throw domain_error("geometric_construction: element " + cur.str() +
                               " leaves the height bounds");
        out.push_back(cur);
        if (i + 1 < k) cur = cur.times(ratio);
    }
    return RationalSet::of(std::move(out));
}

RationalSet smooth_construction(const FareyParams& p, std::uint64_t smooth_bound,
                                std::size_t k) {
    if (smooth_bound < 2)
        throw domain_error("smooth_construction: smooth bound must be >= 2");
    RationalSet universe = enumerate_farey(p);
    std::vector<ReducedFraction> smooth;
    for (const auto& f : universe)
        if (is_smooth(f.num(), smooth_bound) && is_smooth(f.den(), smooth_bound))
            smooth.push_back(f);
    if (smooth.size() < k)
        throw domain_error("smooth_construction: only " +
                           std::to_string(smooth.size()) + " smooth elements, " +
                           std::to_string(k) + " requested");
    std::stable_sort(smooth.begin(), smooth.end(),
                     [](const ReducedFraction& a, const ReducedFraction& b) {
                         return std::max(a.num(), a.den()) < std::max(b.num(), b.den());
                     });
    smooth.erase(smooth.begin() + static_cast<std::ptrdiff_t>(k), smooth.end());
    return RationalSet::of(std::move(smooth));
}

SearchResult local_search_min(const FareyParams& p, std::size_t k,
                              Objective objective, std::size_t iters,
                              std::uint64_t seed, std::size_t restarts) {
    RationalSet universe = enumerate_farey(p);
    if (k < 1 || k > universe.size())
        throw domain_error("local_search_min: k must be in [1, |F|]");
    std::vector<ReducedFraction> pool(universe.begin(), universe.end());

    SearchResult best;
    best.q = p.q();
    best.qprime = p.qprime();
    best.k = k;
    best.method = "local";
    bool have = false;

    for (std::size_t restart = 0; restart < restarts; ++restart) {
        RationalSet current;
        if (restart == 0) current = geometric_seed(p, k);
        if (restart == 1) {
            try {
                current = smooth_construction(p, 2, k);
            } catch (const domain_error&) {
            }
        }
        if (current.size() != k)
            current = random_subset(p, k, subtask_seed(seed, restart));

        auto rng = make_rng(subtask_seed(seed, restart + restarts));
        std::uint64_t value = evaluate(current, current, objective);
        std::vector<ReducedFraction> members(current.begin(), current.end());
        for (std::size_t it = 0; it < iters && k < pool.size(); ++it) {
            std::uniform_int_distribution<std::size_t> pick_out(0, members.size() - 1);
            std::uniform_int_distribution<std::size_t> pick_in(0, pool.size() - 1);
            std::size_t out_i = pick_out(rng);
            const ReducedFraction& in = pool[pick_in(rng)];
            if (current.contains(in)) continue;
            ReducedFraction removed = members[out_i];
            members[out_i] = in;
            RationalSet candidate = RationalSet::of(members);
            std::uint64_t v = evaluate(candidate, candidate, objective);
            if (v < value) {
                value = v;
                current = candidate;
            } else {
                members[out_i] = removed;
            }
        }
        if (!have || value < best.objective ||
            (value == best.objective && lex_less(current, best.witness_a))) {
            best.objective = value;
            best.witness_a = current;
            best.witness_b = current;
            have = true;
        }
    }
    return best;
}

}  // namespace prodset
