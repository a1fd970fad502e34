#include "prodset/rational.hpp"

#include <charconv>
#include <numeric>

namespace prodset {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw capacity_error("64-bit overflow in rational arithmetic: " +
                             std::to_string(a) + " * " + std::to_string(b));
    return out;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw domain_error("malformed rational component: '" + std::string(text) + "'");
    return value;
}

}  // namespace

ReducedFraction ReducedFraction::reduce(std::uint64_t num, std::uint64_t den) {
    if (num == 0 || den == 0)
        throw domain_error("rationals must be positive: got " + std::to_string(num) +
                           "/" + std::to_string(den));
    std::uint64_t g = std::gcd(num, den);
    return ReducedFraction(num / g, den / g);
}

ReducedFraction ReducedFraction::times(const ReducedFraction& other) const {
    // Cancel across before multiplying; the factors are already reduced, so
    // the result is reduced and the intermediates are as small as possible.
    std::uint64_t g1 = std::gcd(num_, other.den_);
    std::uint64_t g2 = std::gcd(other.num_, den_);
    return ReducedFraction(checked_mul(num_ / g1, other.num_ / g2),
                           checked_mul(den_ / g2, other.den_ / g1));
}

ReducedFraction ReducedFraction::over(const ReducedFraction& other) const {
    return times(other.inverted());
}

std::strong_ordering ReducedFraction::operator<=>(const ReducedFraction& other) const {
    using u128 = unsigned __int128;
    u128 lhs = static_cast<u128>(num_) * other.den_;
    u128 rhs = static_cast<u128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ReducedFraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

ReducedFraction ReducedFraction::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return reduce(parse_u64(text), 1);
    return reduce(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
}

FareyParams::FareyParams(double q, double qprime) : q_(q), qprime_(qprime) {
    if (!(q >= 1.0) || !(qprime >= 1.0))
        throw domain_error("Farey parameters require Q >= 1 and Q' >= 1");
    if (!(q * qprime <= 2147483648.0))  // 2^31
        throw capacity_error("Q*Q' exceeds the 2^31 cap required for exact comparisons");
}

bool in_farey(const ReducedFraction& f, const FareyParams& p) {
    return static_cast<double>(f.num()) <= p.q() &&
           static_cast<double>(f.den()) <= p.qprime();
}

}  // namespace prodset
