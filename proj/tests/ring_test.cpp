#include <doctest.h>

#include <random>

#include "bnskein/ring.hpp"

using bnskein::DomainError;
using bnskein::OverflowError;
using bnskein::ParseError;
using bnskein::ring::CoeffRing;
using bnskein::ring::LaurentElement;
using bnskein::ring::Rational;

TEST_CASE("rational basic arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(0) + Rational(7, 3) == Rational(7, 3));
  CHECK((Rational(1, 4) + Rational(-1, 4)).is_zero());
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(Rational(1) / Rational(4) == Rational(1, 4));
  CHECK(Rational(5, 6) - Rational(1, 6) == Rational(2, 3));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
}

TEST_CASE("rational normalization invariants hold on random samples") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 25);
  for (int i = 0; i < 300; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    Rational s = a + b;
    CHECK(std::gcd(s.num() < 0 ? -s.num() : s.num(), s.den()) == 1);
    CHECK(s.den() > 0);
  }
}

TEST_CASE("rational pow and errors") {
  CHECK(Rational(2).pow(10) == Rational(1024));
  CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-1).pow(5) == Rational(-1));
  CHECK(Rational(7).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational overflow is loud") {
  Rational big(std::numeric_limits<long long>::max() / 2);
  CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("rational text round trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("+2") == Rational(2));
  CHECK(Rational(-5, 3).to_string() == "-5/3");
  CHECK(Rational(4).to_string() == "4");
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("halve respects the ring mode") {
  CHECK(halve(Rational(3), CoeffRing::rationals, "test") == Rational(3, 2));
  CHECK_THROWS_AS(halve(Rational(3), CoeffRing::integers, "test"), DomainError);
}

TEST_CASE("laurent arithmetic") {
  auto x = [](long long e2) { return LaurentElement::monomial(Rational(1), e2); };
  CHECK(x(2) * x(-2) == LaurentElement(Rational(1)));
  CHECK((x(2) + LaurentElement(Rational(1))) * x(2) == x(4) + x(2));
  // half-integer exponents: x^{1/2} * x^{1/2} = x, i.e. 1 + 1 = 2 doubled
  CHECK(x(1) * x(1) == x(2));
  CHECK((x(2) - x(2)).is_zero());
  LaurentElement sum = x(2) + x(2);
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum.terms().at(2) == Rational(2));
}

TEST_CASE("laurent keeps no zero terms") {
  LaurentElement a = LaurentElement::monomial(Rational(1, 2), 3);
  LaurentElement b = LaurentElement::monomial(Rational(-1, 2), 3);
  CHECK((a + b).terms().empty());
  CHECK(LaurentElement::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("laurent rendering") {
  LaurentElement e = LaurentElement::monomial(Rational(3, 2), 1) + LaurentElement(Rational(1));
  CHECK(e.to_string() == "3/2*x^{1/2} + 1");
  CHECK(LaurentElement().to_string() == "0");
  CHECK(LaurentElement::monomial(Rational(1), 4).to_string() == "x^{2}");
  CHECK(LaurentElement::monomial(Rational(-2), -2).to_string() == "-2*x^{-1}");
  CHECK(LaurentElement::monomial(Rational(1), -3).to_string() == "x^{-3/2}");
}
