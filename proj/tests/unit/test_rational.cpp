#include "doctest.h"

#include "bringlab/rational.hpp"

using namespace bringlab;

TEST_CASE("rational canonical form") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rational b(3, -6);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).den() == 1);
}

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(4, 3) == Rational(2, 3));
    CHECK(Rational(7, 3).inverse() == Rational(3, 7));
    CHECK_THROWS_AS(Rational(1, 0), ZeroDivision);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDivision);
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational(-25, 2).str() == "-25/2");
}

TEST_CASE("exact square roots") {
    Rational r;
    CHECK(Rational(9, 4).sqrt_exact(r));
    CHECK(r == Rational(3, 2));
    CHECK(!Rational(2).sqrt_exact(r));
    CHECK(!Rational(-4).sqrt_exact(r));
    CHECK(Rational(0).sqrt_exact(r));
    CHECK(r == Rational(0));
}
