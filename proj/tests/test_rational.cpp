#include <doctest.h>

#include <random>

#include "recur/rational.hpp"

using recur::BadParam;
using recur::BigInt;
using recur::ParseError;
using recur::Rational;

TEST_CASE("construction canonicalizes to lowest terms with positive denominator") {
    CHECK(Rational(BigInt(4), BigInt(6)).str() == "2/3");
    CHECK(Rational(BigInt(-4), BigInt(6)).str() == "-2/3");
    CHECK(Rational(BigInt(4), BigInt(-6)).str() == "-2/3");
    CHECK(Rational(BigInt(-4), BigInt(-6)).str() == "2/3");
    CHECK(Rational(BigInt(0), BigInt(7)).str() == "0");
    CHECK(Rational(BigInt(6), BigInt(3)).str() == "2");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), BadParam);
}

TEST_CASE("canonical invariants hold after arithmetic") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const long long p = static_cast<long long>(rng() % 2001) - 1000;
        const long long q = static_cast<long long>(rng() % 1000) + 1;
        const long long r = static_cast<long long>(rng() % 2001) - 1000;
        const long long s = static_cast<long long>(rng() % 1000) + 1;
        const Rational a{BigInt(p), BigInt(q)};
        const Rational b{BigInt(r), BigInt(s)};
        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.denominator() > 0);
            CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(v.numerator()),
                                             v.denominator()) == 1);
        }
    }
}

TEST_CASE("arithmetic is exact") {
    const Rational third = Rational::parse("1/3");
    const Rational sixth = Rational::parse("1/6");
    CHECK(third + sixth == Rational::parse("1/2"));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Rational::parse("1/18"));
    CHECK(third / sixth == Rational(2));
    CHECK((-third).str() == "-1/3");
    CHECK(Rational::parse("1/2") + Rational::parse("1/3") == Rational::parse("5/6"));

    // no drift across many accumulations
    Rational acc;
    for (int i = 0; i < 300; ++i) acc += Rational(BigInt(1), BigInt(300));
    CHECK(acc == Rational(1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), BadParam);
    Rational v(5);
    CHECK_THROWS_AS(v /= Rational(), BadParam);
}

TEST_CASE("comparisons follow numeric order") {
    CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
    CHECK(Rational::parse("-1/2") < Rational::parse("-1/3"));
    CHECK(Rational::parse("2/4") == Rational::parse("1/2"));
    CHECK(Rational(0) <= Rational());
    CHECK(Rational(3) > Rational::parse("8/3"));
    CHECK(Rational::parse("7/5") != Rational::parse("7/6"));
}

TEST_CASE("sign queries") {
    CHECK(Rational().is_zero());
    CHECK(Rational::parse("-3/7").is_negative());
    CHECK(Rational::parse("3/7").is_positive());
    CHECK_FALSE(Rational::parse("3/7").is_negative());
    CHECK_FALSE(Rational().is_positive());
}

TEST_CASE("parse accepts p, p/q and a leading minus") {
    CHECK(Rational::parse("0") == Rational());
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-42") == Rational(-42));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK(Rational::parse("-10/4").str() == "-5/2");
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "-", "/", "1/", "/2", "1/2/3", "1.5", " 1", "1 ", "+1", "a",
                            "1/-2", "--1", "0x10", "1e3"}) {
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
    }
    CHECK_THROWS_AS(Rational::parse("3/0"), ParseError);
}

TEST_CASE("render and parse round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const long long p = static_cast<long long>(rng() % 200001) - 100000;
        const long long q = static_cast<long long>(rng() % 100000) + 1;
        const Rational r{BigInt(p), BigInt(q)};
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("values beyond machine word width stay exact") {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000003);  // far past 64 bits
    CHECK(big.str().size() > 200);
    CHECK(Rational::parse(big.str()) == big);
    const Rational inv = Rational(1) / big;
    CHECK(inv.numerator() == 1);
    CHECK(inv.denominator() == big.numerator());
    CHECK(big * inv == Rational(1));
}
