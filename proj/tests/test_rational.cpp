#include <doctest.h>

#include <sstream>

#include "kindep/rational.hpp"

using kindep::BigInt;
using kindep::Rational;

TEST_CASE("rational normalizes sign and lowest terms") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(r.fraction() == "-3/2");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(10, 5).fraction() == "2/1");
    CHECK(Rational(0, 7).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering are exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == 2);
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(5, 18) < Rational(11, 36));
    CHECK(Rational(5, 13) > Rational(11, 36));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ceil and floor round toward the right integers") {
    CHECK(Rational(28, 9).ceil() == 4);
    CHECK(Rational(28, 9).floor() == 3);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(3).ceil() == 3);
    CHECK(Rational(3).floor() == 3);
    CHECK(Rational(15, 7).ceil_int() == 3);
}

TEST_CASE("large sums do not overflow") {
    // Sum of 1/i for i = 1..60 has a denominator far beyond 64 bits.
    Rational h;
    for (std::int64_t i = 1; i <= 60; ++i) h += Rational(1, i);
    CHECK(h.denominator() > BigInt(std::numeric_limits<std::int64_t>::max()));
    CHECK(h.floor() == 4);
    CHECK_THROWS_AS((h * h.denominator().convert_to<std::int64_t>()).ceil_int(), std::overflow_error);
}

TEST_CASE("parse round-trips the text forms") {
    CHECK(Rational::parse("5/18") == Rational(5, 18));
    CHECK(Rational::parse("-4") == -4);
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    std::ostringstream os;
    os << Rational(9, 13);
    CHECK(os.str() == "9/13");
}

TEST_CASE("ceil_div") {
    CHECK(kindep::ceil_div(14, 10) == 2);
    CHECK(kindep::ceil_div(20, 10) == 2);
    CHECK(kindep::ceil_div(0, 3) == 0);
}
