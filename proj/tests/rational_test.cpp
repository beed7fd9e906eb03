#include <doctest.h>

#include "apkit/rational.hpp"

using apkit::Rational;

TEST_CASE("rational arithmetic normalizes and stays exact") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK(a + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(-4, 6) == Rational(2, -3));
    CHECK((Rational(1, 2) - Rational(1, 2)).isZero());
    CHECK(Rational(7, 2).toString() == "7/2");
    CHECK(Rational(5).toString() == "5");
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational::max(Rational(2, 3), Rational(3, 5)) == Rational(2, 3));
    CHECK(Rational(1, 3).abs() == Rational(1, 3));
    CHECK(Rational(-1, 3).abs() == Rational(1, 3));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), apkit::ArithmeticError);
    CHECK_THROWS_AS(apkit::checked_mul(INT64_MAX, 2), apkit::ArithmeticError);
    CHECK_THROWS_AS(Rational(1, 0), apkit::ArithmeticError);
}

TEST_CASE("exact rational lift of config doubles") {
    CHECK(Rational::fromDoubleExact(0.1) == Rational(1, 10));
    CHECK(Rational::fromDoubleExact(0.25) == Rational(1, 4));
    CHECK(Rational::fromDoubleExact(-2.5) == Rational(-5, 2));
    CHECK(Rational::fromDoubleExact(3.0) == Rational(3));
}
