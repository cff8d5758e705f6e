#include <doctest.h>

#include <random>

#include "bnskein/mbn.hpp"

using namespace bnskein::mbn;
using bnskein::BitClass;
using bnskein::DomainError;
using bnskein::ring::LaurentElement;
using bnskein::ring::Rational;

namespace {

const std::vector<Rational> kGrid = {
    Rational(0),     Rational(1),      Rational(-1),    Rational(1, 2), Rational(-1, 2),
    Rational(1, 4),  Rational(-1, 4),  Rational(2),     Rational(-2),
};

MbnSurface::Component comp(int chi, int dots, uint32_t bits, int width, bool orientable = true) {
  return {chi, dots, H2Class(bits, width), orientable};
}

}  // namespace

TEST_CASE("normalization consistency check") {
  CHECK(check_normalization({Rational(1), Rational(1, 4), Rational(1, 2)}));
  CHECK(check_normalization({Rational(7), Rational(0), Rational(1)}));
  CHECK(check_normalization({Rational(-3), Rational(0), Rational(0)}));
  CHECK_FALSE(check_normalization({Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("the three families sample to solutions") {
  auto families = enumerate_normalization_families();
  REQUIRE(families.size() == 3);
  for (const auto& fam : families) {
    for (const Rational& x : {Rational(1), Rational(1, 2), Rational(7), Rational(-2)}) {
      NormalizationConstants c = fam.sample(x);
      CHECK(check_normalization(c));
      CHECK(fam.contains(c));
      CHECK(in_some_family(c));
    }
  }
  CHECK(check_normalization(families[0].sample(Rational(1, 2))));
  CHECK_THROWS_AS(families[0].sample(Rational(0)), DomainError);
}

TEST_CASE("grid scan finds no solutions outside the families") {
  for (const Rational& x : kGrid)
    for (const Rational& y : kGrid)
      for (const Rational& z : kGrid) {
        NormalizationConstants c{x, y, z};
        CHECK(check_normalization(c) == in_some_family(c));
      }
}

TEST_CASE("dotted state recursion") {
  CHECK(dotted_state_recursion_check(Rational(5), 0) == Rational(1));
  CHECK(dotted_state_recursion_check(Rational(1, 2), 1) == Rational(1));
  CHECK(dotted_state_recursion_check(Rational(1), 3) == Rational(8));
  CHECK(dotted_state_recursion_check(Rational(-1, 2), 4) == Rational(1));
  CHECK_THROWS_AS(dotted_state_recursion_check(Rational(1), -1), DomainError);
}

TEST_CASE("mbn evaluation of single components") {
  // orientable genus 1, no dots: exponent g - 1 = 0
  MbnElement torus = mbn_evaluate({2, {comp(0, 0, 0b10u, 2)}});
  CHECK(torus == MbnElement::monomial(H2Class(0b10u, 2), LaurentElement(Rational(1))));

  // dotted sphere: x^{-1} from chi = 2, times x for the dot
  MbnElement dotted_sphere = mbn_evaluate({1, {comp(2, 1, 0, 1)}});
  CHECK(dotted_sphere == MbnElement::unit(1));

  // genus 2 plus genus 0: exponents (2-1) + (0-1) = 0, classes add
  MbnElement pair = mbn_evaluate({2, {comp(-2, 0, 0b01u, 2), comp(2, 0, 0b11u, 2)}});
  CHECK(pair == MbnElement::monomial(H2Class(0b10u, 2), LaurentElement(Rational(1))));

  // Klein bottle: chi = 0, non-orientable, exponent 0
  MbnElement klein = mbn_evaluate({1, {comp(0, 0, 0b1u, 1, false)}});
  CHECK(klein == MbnElement::monomial(H2Class(0b1u, 1), LaurentElement(Rational(1))));

  // empty surface is the unit
  CHECK(mbn_evaluate({3, {}}) == MbnElement::unit(3));
}

TEST_CASE("odd characteristic is gated") {
  MbnSurface rp2{1, {comp(1, 0, 0b1u, 1, false)}};
  CHECK_THROWS_AS(mbn_evaluate(rp2), DomainError);
  MbnElement e = mbn_evaluate(rp2, true);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->second.terms().count(-1) == 1);  // x^{-1/2}

  CHECK_THROWS_AS(mbn_evaluate({1, {comp(1, 0, 0b1u, 1, true)}}, true), DomainError);
  CHECK_THROWS_AS(mbn_evaluate({1, {comp(4, 0, 0, 1)}}), DomainError);
}

TEST_CASE("group algebra multiplication") {
  MbnElement h = MbnElement::monomial(H2Class(0b1u, 1), LaurentElement(Rational(1)));
  CHECK(mbn_multiply(h, h) == MbnElement::unit(1));

  MbnElement a = MbnElement::monomial(H2Class(0b01u, 2), LaurentElement::monomial(Rational(1), 2));
  MbnElement b =
      MbnElement::monomial(H2Class(0b10u, 2), LaurentElement::monomial(Rational(1), -2));
  CHECK(mbn_multiply(a, b) ==
        MbnElement::monomial(H2Class(0b11u, 2), LaurentElement(Rational(1))));
}

TEST_CASE("evaluation is multiplicative and dots scale by x") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> nc(0, 3), chi_pick(0, 3), dots(0, 2);
  std::uniform_int_distribution<uint32_t> bits(0, 7);
  const int chis[] = {2, 0, -2, -4};
  for (int trial = 0; trial < 120; ++trial) {
    MbnSurface f{3, {}}, g{3, {}}, joint{3, {}};
    for (int i = nc(rng); i > 0; --i)
      f.components.push_back(comp(chis[chi_pick(rng)], dots(rng), bits(rng), 3));
    for (int i = nc(rng); i > 0; --i)
      g.components.push_back(comp(chis[chi_pick(rng)], dots(rng), bits(rng), 3));
    joint.components = f.components;
    joint.components.insert(joint.components.end(), g.components.begin(), g.components.end());
    CHECK(mbn_evaluate(joint) == mbn_multiply(mbn_evaluate(f), mbn_evaluate(g)));

    if (!f.components.empty()) {
      MbnSurface extra = f;
      extra.components[0].dots += 1;
      MbnElement x_factor =
          MbnElement::monomial(H2Class(0, 3), LaurentElement::monomial(Rational(1), 2));
      CHECK(mbn_evaluate(extra) == mbn_multiply(x_factor, mbn_evaluate(f)));
    }
  }
}

TEST_CASE("neck cuts leave the evaluation unchanged") {
  std::mt19937 rng(2121);
  std::uniform_int_distribution<int> chi_pick(0, 3), dots(0, 2), split(0, 4);
  std::uniform_int_distribution<uint32_t> bits(0, 7);
  const int chis[] = {2, 0, -2, -4};
  for (int trial = 0; trial < 120; ++trial) {
    MbnSurface f{3, {comp(chis[chi_pick(rng)], dots(rng), bits(rng), 3)}};
    const auto& c = f.components[0];
    // cut: chi1 + chi2 = chi + 2, one new dot on either side, class splits;
    // both pieces must stay legal closed surfaces (chi <= 2)
    int options = (2 - c.euler_char) / 2 + 1;
    int chi1 = c.euler_char + 2 * (split(rng) % options);
    int chi2 = c.euler_char + 2 - chi1;
    uint32_t b1 = bits(rng);
    uint32_t b2 = c.cls.bits ^ b1;
    int d1 = std::uniform_int_distribution<int>(0, c.dots)(rng);
    bool dot_on_first = trial % 2 == 0;
    MbnSurface cut{3,
                   {comp(chi1, d1 + (dot_on_first ? 1 : 0), b1, 3),
                    comp(chi2, c.dots - d1 + (dot_on_first ? 0 : 1), b2, 3)}};
    CHECK(mbn_evaluate(cut) == mbn_evaluate(f));
  }
}

TEST_CASE("mbn element rendering") {
  CHECK(MbnElement().to_string() == "0");
  CHECK(MbnElement::unit(3).to_string() == "1 * [000]");
  MbnElement e =
      MbnElement::monomial(H2Class(0b101u, 3), LaurentElement::monomial(Rational(1, 2), 2));
  CHECK(e.to_string() == "1/2*x^{1} * [101]");
  MbnElement two = MbnElement::monomial(
      H2Class(0b1u, 2),
      LaurentElement::monomial(Rational(1), 2) + LaurentElement(Rational(1)));
  CHECK(two.to_string() == "(x^{1} + 1) * [10]");
}

TEST_CASE("bit class parsing round trips") {
  BitClass c = BitClass::parse("0110");
  CHECK(c.width == 4);
  CHECK(c.to_string() == "0110");
  CHECK(BitClass::parse("").width == 0);
  CHECK((BitClass(0b11u, 2) + BitClass(0b01u, 2)) == BitClass(0b10u, 2));
  CHECK_THROWS_AS(BitClass::parse("01x"), bnskein::ParseError);
  CHECK_THROWS_AS(BitClass(0b1u, 2) + BitClass(0b1u, 3), DomainError);
}
