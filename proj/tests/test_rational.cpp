#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tricover/rational.hpp"

#include "test_support.hpp"

#include <random>

using namespace tricover;

TEST_CASE("construction is canonical") {
    CHECK(rat(4, 6) == rat(2, 3));
    CHECK(numerator(rat(4, 6)) == 2);
    CHECK(denominator(rat(4, 6)) == 3);
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(denominator(rat(3, -6)) == 2);  // denominator stays positive
    CHECK(rat(0, 7) == 0);
}

TEST_CASE("exact arithmetic") {
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
    CHECK(rat(1, 3) - rat(1, 2) == rat(-1, 6));
    CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
    CHECK(rat(1, 3) / rat(2, 9) == rat(3, 2));
    CHECK(rat(1, 3) < rat(34, 100));
    CHECK(rat(1, 3) > rat(33, 100));
}

TEST_CASE("floor and ceiling") {
    CHECK(floor_rat(rat(7, 2)) == 3);
    CHECK(ceil_rat(rat(7, 2)) == 4);
    CHECK(floor_rat(rat(-7, 2)) == -4);
    CHECK(ceil_rat(rat(-7, 2)) == -3);
    CHECK(floor_rat(rat(4)) == 4);
    CHECK(ceil_rat(rat(4)) == 4);
    CHECK(floor_rat(rat(0)) == 0);
}

TEST_CASE("mod-1 fold") {
    CHECK(frac_rat(rat(12, 5)) == rat(2, 5));
    CHECK(frac_rat(rat(-12, 5)) == rat(3, 5));
    CHECK(frac_rat(rat(3)) == 0);
    CHECK(frac_rat(rat(-3)) == 0);
    CHECK(frac_rat(rat(1, 2)) == rat(1, 2));
}

TEST_CASE("parsing fractions, integers and decimals") {
    CHECK(parse_rational("2/3") == rat(2, 3));
    CHECK(parse_rational("4/6") == rat(2, 3));
    CHECK(parse_rational("7") == rat(7));
    CHECK(parse_rational("-1/2") == rat(-1, 2));
    CHECK(parse_rational("+3/4") == rat(3, 4));

    // Decimals convert exactly, not through binary floating point.
    CHECK(parse_rational("0.3") == rat(3, 10));
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational(".5") == rat(1, 2));
    CHECK(parse_rational("1.") == rat(1));
    CHECK(parse_rational("-2.75") == rat(-11, 4));
    CHECK(parse_rational("0.1") == rat(1, 10));
}

TEST_CASE("parsing rejects malformed text") {
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("-"));
    CHECK_FALSE(parse_rational("abc"));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1/-2"));
    CHECK_FALSE(parse_rational("1.2.3"));
    CHECK_FALSE(parse_rational("1/2/3"));
    CHECK_FALSE(parse_rational("."));
    CHECK_FALSE(parse_rational("1e3"));
    CHECK_FALSE(parse_rational(" 1/2"));
}

TEST_CASE("formatting is lowest-terms") {
    CHECK(format_rational(rat(1, 2)) == "1/2");
    CHECK(format_rational(rat(4, 2)) == "2");
    CHECK(format_rational(rat(-1, 2)) == "-1/2");
    CHECK(format_rational(rat(0)) == "0");
    CHECK(format_rational(rat(4, 6)) == "2/3");
}

TEST_CASE("format/parse round-trips") {
    std::mt19937_64 gen(20240811);
    for (int i = 0; i < 10000; ++i) {
        Rational q = testing::random_rational(gen, 10000, -50, 50);
        auto back = parse_rational(format_rational(q));
        REQUIRE(back);
        CHECK(*back == q);
    }
}

TEST_CASE("arbitrary precision survives large telescopes") {
    // Denominators past 64 bits must stay exact.
    Rational sum = 0;
    for (int k = 1; k <= 60; ++k) sum += Rational(BigInt(1), BigInt(k) * BigInt(k + 1));
    CHECK(sum == 1 - rat(1, 61));
    Rational big(BigInt("123456789012345678901234567890"), BigInt("98765432109876543210987654321"));
    auto round = parse_rational(format_rational(big));
    REQUIRE(round);
    CHECK(*round == big);
}
