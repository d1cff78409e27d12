#include <doctest.h>

#include "martex/error.hpp"
#include "martex/rational.hpp"

using martex::Error;
using martex::Rational;

TEST_CASE("construction keeps lowest terms and positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parsing accepts p/q, integers and decimal strings") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse(" 5 ") == Rational(5));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-3.5") == Rational(-7, 2));
    CHECK(Rational::parse("1.50") == Rational(3, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));

    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1e3"), Error);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), Error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), Error);

    // no drift over many accumulations
    Rational sum;
    for (int i = 0; i < 300; ++i) sum += Rational(1, 300);
    CHECK(sum == Rational(1));
}

TEST_CASE("ordering and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(-3, 7).sign() == -1);
}

TEST_CASE("big values stay exact") {
    Rational f(1);
    for (long k = 1; k <= 100; ++k) f *= Rational(k);
    Rational g(1);
    for (long k = 1; k <= 99; ++k) g *= Rational(k);
    CHECK(f / g == Rational(100));
}
