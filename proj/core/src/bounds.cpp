#include "prodset/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "prodset/errors.hpp"
#include "prodset/format.hpp"

namespace prodset {

namespace {

const double kTheorem1Constant = 2.0 * std::sqrt(std::log(2.0));
const double kTheoremAConstant = 9.0;
const double kCorollaryConstant = 4.0 * std::sqrt(std::log(2.0));

double reference_curve(std::uint64_t card_a, std::uint64_t card_b, double constant,
                       double arg) {
    if (!(std::log(std::log(arg)) > 0.0))
        throw domain_error("reference bound: requires log log of the height "
                           "argument to be positive");
    return static_cast<double>(card_a) * static_cast<double>(card_b) *
           std::exp(-constant * std::log(arg) / std::sqrt(std::log(std::log(arg))));
}

}  // namespace

double conditional_bound(std::uint64_t card_a, std::uint64_t card_b,
                         std::uint32_t t, double x) {
    if (t < 1 || !(x >= 1.0))
        throw domain_error("conditional_bound: requires T >= 1 and x >= 1");
    double tt = static_cast<double>(t);
    return static_cast<double>(card_a) * static_cast<double>(card_b) /
           (2.0 * tt * tt * x * (1.0 + std::log(x)));
}

double lemma_bound(std::uint64_t card_a, std::uint64_t card_b,
                   const FareyParams& p, std::uint32_t n, std::uint32_t t) {
    if (n < 1 || t < 1) throw domain_error("lemma_bound: requires n >= 1, T >= 1");
    double qq = p.qq();
    double denom = std::pow(4.0 * t, n + 1.0) * std::pow(qq, 1.0 / n) *
                   (1.0 + std::log(qq));
    return static_cast<double>(card_a) * static_cast<double>(card_b) / denom;
}

BestLevel best_n(std::uint64_t card_a, std::uint64_t card_b, const FareyParams& p,
                 std::uint32_t t, std::uint32_t n_max) {
    if (n_max < 1) throw domain_error("best_n: requires n_max >= 1");
    BestLevel best{1, lemma_bound(card_a, card_b, p, 1, t)};
    for (std::uint32_t n = 2; n <= n_max; ++n) {
        double v = lemma_bound(card_a, card_b, p, n, t);
        if (v > best.bound) best = {n, v};
    }
    return best;
}

std::uint32_t default_n_max(const FareyParams& p) {
    return std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(std::ceil(std::log(p.qq()))));
}

double theorem1_reference(std::uint64_t card_a, std::uint64_t card_b,
                          const FareyParams& p) {
    return reference_curve(card_a, card_b, kTheorem1Constant, p.qq());
}

double theoremA_reference(std::uint64_t card_a, std::uint64_t card_b, double q) {
    return reference_curve(card_a, card_b, kTheoremAConstant, q);
}

double corollary_reference(std::uint64_t card_a, std::uint64_t card_b, double q) {
    return reference_curve(card_a, card_b, kCorollaryConstant, q);
}

std::string BoundReport::to_json() const {
    std::ostringstream out;
    out << "{\"q\":" << format_real(q) << ",\"qprime\":" << format_real(qprime)
        << ",\"card_a\":" << card_a << ",\"card_b\":" << card_b
        << ",\"t_qq\":" << t_qq << ",\"actual_quotient\":" << actual_quotient;
    if (actual_product) out << ",\"actual_product\":" << *actual_product;
    for (std::size_t i = 0; i < lemma_bounds.size(); ++i)
        out << ",\"lemma_n" << (i + 1) << "\":" << format_real(lemma_bounds[i]);
    out << ",\"best_n\":" << best_n << ",\"best_bound\":" << format_real(best_bound)
        << ",\"thm1_ref\":" << format_real(thm1_ref)
        << ",\"thmA_ref\":" << format_real(thmA_ref)
        << ",\"cor_ref\":" << format_real(cor_ref) << "}";
    return out.str();
}

std::string BoundReport::csv_header(std::uint32_t n_max) {
    std::string header = "q,qprime,card_a,card_b,t_qq,actual_quotient";
    for (std::uint32_t n = 1; n <= n_max; ++n)
        header += ",lemma_n" + std::to_string(n);
    header += ",best_n,best_bound,thm1_ref,thmA_ref,cor_ref";
    return header;
}

std::string BoundReport::to_csv_row() const {
    std::ostringstream out;
    out << format_real(q) << ',' << format_real(qprime) << ',' << card_a << ','
        << card_b << ',' << t_qq << ',' << actual_quotient;
    for (double v : lemma_bounds) out << ',' << format_real(v);
    out << ',' << best_n << ',' << format_real(best_bound) << ','
        << format_real(thm1_ref) << ',' << format_real(thmA_ref) << ','
        << format_real(cor_ref);
    return out.str();
}

BoundReport compare_actual(const RationalSet& a, const RationalSet& b,
                           const FareyParams& p, const TauTable& table,
                           std::uint32_t n_max, bool with_product) {
    BoundReport rep;
    rep.q = p.q();
    rep.qprime = p.qprime();
    rep.card_a = a.size();
    rep.card_b = b.size();
    rep.t_qq = table.tau_max(p.qq());
    rep.actual_quotient = a.empty() || b.empty() ? 0 : quotient_set(a, b).size();
    if (with_product)
        rep.actual_product = a.empty() || b.empty()
                                 ? 0
                                 : product_set(a, b).size();
    rep.lemma_bounds.reserve(n_max);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        double bound = lemma_bound(rep.card_a, rep.card_b, p, n, rep.t_qq);
        // Exact integer on the right; a violation means broken arithmetic.
        if (bound > static_cast<double>(rep.actual_quotient) &&
            !(a.empty() || b.empty()))
            throw certification_error("lemma bound " + format_real(bound) +
                                      " at n=" + std::to_string(n) +
                                      " exceeds exact |A/B| = " +
                                      std::to_string(rep.actual_quotient));
        rep.lemma_bounds.push_back(bound);
    }
    BestLevel bl = best_n(rep.card_a, rep.card_b, p, rep.t_qq, n_max);
    rep.best_n = bl.n;
    rep.best_bound = bl.bound;
    auto quiet = std::numeric_limits<double>::quiet_NaN();
    try {
        rep.thm1_ref = theorem1_reference(rep.card_a, rep.card_b, p);
    } catch (const domain_error&) {
        rep.thm1_ref = quiet;
    }
    try {
        rep.thmA_ref = theoremA_reference(rep.card_a, rep.card_b, p.q());
    } catch (const domain_error&) {
        rep.thmA_ref = quiet;
    }
    try {
        rep.cor_ref = corollary_reference(rep.card_a, rep.card_b, p.q());
    } catch (const domain_error&) {
        rep.cor_ref = quiet;
    }
    return rep;
}

}  // namespace prodset
