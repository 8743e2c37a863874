#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "casimir/rational.hpp"

using casimir::Rational;

TEST_CASE("rational normal form") {
  const Rational q(6, -8);
  CHECK(q.num() == -3);
  CHECK(q.den() == 4);
  CHECK(Rational(0, -5).den() == 1);
  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == 2);
  CHECK(-a == Rational(-1, 3));
  CHECK(a > b);
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational str and parse round trip") {
  for (const Rational q : {Rational(8, 3), Rational(-7, 2), Rational(5), Rational(0), Rational(-52, 3)}) {
    CHECK(Rational::parse(q.str()) == q);
  }
  CHECK(Rational(8, 3).str() == "8/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/4z"), std::invalid_argument);
}

TEST_CASE("rational overflow is reported") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + 1, std::overflow_error);
  CHECK_THROWS_AS(big * 2, std::overflow_error);
  // Intermediates that cancel back into range are fine.
  CHECK(Rational(std::numeric_limits<std::int64_t>::max(), 3) * Rational(3, 7) ==
        Rational(std::numeric_limits<std::int64_t>::max(), 7));
}
