#include <doctest.h>

#include <cmath>
#include <random>

#include "plab/rational.hpp"

using namespace plab;

TEST_CASE("rationals stay reduced with positive denominators") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");

  const Rational s(10, 5);
  CHECK(s.is_integer());
  CHECK(s.str() == "2");
}

TEST_CASE("parse and format round-trip") {
  for (const char* text : {"3/5", "-7/25", "5", "0", "-1", "144/169"}) {
    CHECK(Rational::parse(text).str() == text);
  }
  CHECK(Rational::parse("5/1").str() == "5");  // both integer spellings accepted
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic round-trips exactly") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const Rational a(static_cast<long>(rng() % 2000) - 1000,
                     static_cast<long>(rng() % 999) + 1);
    const Rational c(static_cast<long>(rng() % 2000) - 1000,
                     static_cast<long>(rng() % 999) + 1);
    CHECK((a + c) - c == a);
    if (c.sign() != 0) CHECK((a / c) * c == a);
    CHECK((a * c) == (c * a));
  }
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("float_shadow is the nearest double") {
  CHECK(float_shadow(Rational(1, 2)) == 0.5);
  CHECK(std::abs(float_shadow(Rational(49, 625)) - 0.0784) < 1e-15);
  CHECK(std::abs(float_shadow(Rational(25, 169)) - 0.14793) < 1e-5);
  // a value needing correct rounding rather than truncation
  CHECK(float_shadow(Rational(1, 3)) == 1.0 / 3.0);
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(144, 169) > Rational(25, 169));
  CHECK(Rational(16, 25) < Rational(144, 169));
  CHECK(Rational(16, 25) > Rational(25, 169));
  CHECK(Rational(1, 3) != Rational(33333333, 100000000));
}

TEST_CASE("bit_size reflects the larger side") {
  CHECK(Rational(1, 1024).bit_size() == 11);
  CHECK(Rational(255).bit_size() == 8);
}
