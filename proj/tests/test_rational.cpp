#include "doctest.h"

#include <random>
#include <sstream>

#include "prodset/rational.hpp"
#include "prodset/rational_set.hpp"

using namespace prodset;

TEST_CASE("reduce cancels the gcd") {
    CHECK(ReducedFraction::reduce(4, 6) == ReducedFraction::reduce(2, 3));
    CHECK(ReducedFraction::reduce(4, 6).num() == 2);
    CHECK(ReducedFraction::reduce(4, 6).den() == 3);
    CHECK(ReducedFraction::reduce(5, 1).str() == "5/1");
    CHECK(ReducedFraction::reduce(720720, 720720) == ReducedFraction::reduce(1, 1));
}

TEST_CASE("reduce rejects zero") {
    CHECK_THROWS_AS(ReducedFraction::reduce(0, 3), domain_error);
    CHECK_THROWS_AS(ReducedFraction::reduce(3, 0), domain_error);
}

TEST_CASE("reduce is idempotent") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> d(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        auto f = ReducedFraction::reduce(d(rng), d(rng));
        CHECK(ReducedFraction::reduce(f.num(), f.den()) == f);
    }
}

TEST_CASE("multiply") {
    auto f = [](std::uint64_t n, std::uint64_t d) { return ReducedFraction::reduce(n, d); };
    CHECK(f(2, 3).times(f(3, 2)) == f(1, 1));
    CHECK(f(1, 2).times(f(1, 2)) == f(1, 4));
    CHECK(f(2, 3).times(f(4, 5)) == f(8, 15));
}

TEST_CASE("divide") {
    auto f = [](std::uint64_t n, std::uint64_t d) { return ReducedFraction::reduce(n, d); };
    CHECK(f(2, 3).over(f(4, 5)) == f(5, 6));
    CHECK(f(1, 1).over(f(7, 2)) == f(2, 7));
    CHECK(f(4, 1).over(f(2, 1)) == f(2, 1));
}

TEST_CASE("reciprocal is an involution with 1 as fixed point") {
    auto f = [](std::uint64_t n, std::uint64_t d) { return ReducedFraction::reduce(n, d); };
    CHECK(f(1, 2).inverted() == f(2, 1));
    CHECK(f(1, 1).inverted() == f(1, 1));
    CHECK(f(3, 7).inverted() == f(7, 3));
    CHECK(f(3, 7).inverted().inverted() == f(3, 7));
}

TEST_CASE("multiply/divide round-trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> d(1, 50'000);
    for (int i = 0; i < 500; ++i) {
        auto f = ReducedFraction::reduce(d(rng), d(rng));
        auto g = ReducedFraction::reduce(d(rng), d(rng));
        CHECK(f.times(g).over(g) == f);
    }
}

TEST_CASE("overflow raises capacity_error, never wraps") {
    auto big = ReducedFraction::reduce(0xffffffffffffULL, 1);
    CHECK_THROWS_AS(big.times(big).times(big), capacity_error);
}

TEST_CASE("ordering is by rational value") {
    auto f = [](std::uint64_t n, std::uint64_t d) { return ReducedFraction::reduce(n, d); };
    CHECK(f(1, 2) < f(2, 3));
    CHECK(f(2, 3) < f(1, 1));
    CHECK(f(7, 5) > f(4, 3));
    // cross products near the top of the range still compare correctly
    auto a = f((1ULL << 31) - 1, 1ULL << 31);
    auto b = f(1ULL << 31, (1ULL << 31) + 1);
    CHECK(a < b);
}

TEST_CASE("parse accepts p/q and bare p") {
    CHECK(ReducedFraction::parse("4/6") == ReducedFraction::reduce(2, 3));
    CHECK(ReducedFraction::parse("5") == ReducedFraction::reduce(5, 1));
    CHECK_THROWS_AS(ReducedFraction::parse("x/3"), domain_error);
    CHECK_THROWS_AS(ReducedFraction::parse("0/3"), domain_error);
}

TEST_CASE("in_farey uses reduced heights") {
    FareyParams p32(3, 2);
    CHECK(in_farey(ReducedFraction::reduce(3, 2), p32));
    CHECK_FALSE(in_farey(ReducedFraction::reduce(3, 2), FareyParams(2, 2)));
    CHECK(in_farey(ReducedFraction::reduce(1, 1), FareyParams(1, 1)));
}

TEST_CASE("FareyParams enforces its caps") {
    CHECK_THROWS_AS(FareyParams(0.5, 2), domain_error);
    CHECK_THROWS_AS(FareyParams(1e6, 1e6), capacity_error);
}

TEST_CASE("text format round-trips through a stream") {
    std::stringstream buf;
    buf << "# comment\n  2/4 \n\n3\n1/2\n";
    RationalSet s = read_rational_set(buf);
    CHECK(s.size() == 2);  // 2/4 and 1/2 collapse
    std::stringstream out;
    write_rational_set(out, s);
    RationalSet again = read_rational_set(out);
    CHECK(again == s);
}
