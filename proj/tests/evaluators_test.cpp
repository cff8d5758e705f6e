#include <doctest.h>

#include <random>

#include "bnskein/evaluators.hpp"

using namespace bnskein::evals;
using bnskein::DomainError;
using bnskein::core::ClosureResult;
using bnskein::core::oracle_rewrite_closure;
using bnskein::core::State;
using bnskein::ring::Rational;

namespace {

CanonicalBasisElem zpow(int k, Rational c = Rational(1)) {
  CanonicalBasisElem e;
  e.kind = k == 0 ? CanonicalBasisElem::Kind::Empty : CanonicalBasisElem::Kind::ZPow;
  e.coeff = c;
  e.power = k;
  return e;
}

CanonicalBasisElem e0(Rational c = Rational(1)) {
  CanonicalBasisElem e;
  e.kind = CanonicalBasisElem::Kind::E0;
  e.coeff = c;
  return e;
}

// The closure's unique terminal, demanded complete and confluent.
State oracle_terminal(const State& start, const bnskein::core::InstanceGenerator& gen) {
  ClosureResult r = oracle_rewrite_closure(start, gen, 60);
  REQUIRE(r.complete);
  REQUIRE(closure_is_confluent(r));
  return r.terminal.front();
}

}  // namespace

TEST_CASE("s3 evaluation of the basic closed surfaces") {
  CHECK(eval_s3({{{1, 0}}}) == Rational(2));
  CHECK(eval_s3({{{1, 1}}}) == Rational(0));
  CHECK(eval_s3({{{0, 0}}}) == Rational(0));
  CHECK(eval_s3({{{0, 1}}}) == Rational(1));
  CHECK(eval_s3({{{2, 0}}}) == Rational(0));
  CHECK(eval_s3({{}}) == Rational(1));
}

TEST_CASE("s3 evaluation is multiplicative over components") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> genus(0, 3), dots(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    S3Surface a, b, joint;
    for (int i = 0; i < 3; ++i) {
      a.components.emplace_back(genus(rng), dots(rng));
      b.components.emplace_back(genus(rng), dots(rng));
    }
    joint.components = a.components;
    joint.components.insert(joint.components.end(), b.components.begin(), b.components.end());
    CHECK(eval_s3(joint) == eval_s3(a) * eval_s3(b));
  }
}

TEST_CASE("s3 table matches the rewrite oracle") {
  for (int g = 0; g <= 3; ++g) {
    for (int d = 0; d <= 3; ++d) {
      S3Surface surf{{{g, d}}};
      State terminal = oracle_terminal(encode_s3(surf), s3_model_generator());
      State expected = State::term({}, eval_s3(surf));
      CHECK(terminal == expected);
    }
  }
}

TEST_CASE("s1xs2 normal forms of the worked examples") {
  CHECK(normalize_s1xs2({3, {}, {}}) == zpow(3));
  CHECK(normalize_s1xs2({1, {1}, {}}) == e0());
  CHECK(normalize_s1xs2({3, {2}, {}}).kind == CanonicalBasisElem::Kind::Zero);
  CHECK(normalize_s1xs2({2, {1, 2}, {}}) == zpow(0));
  CHECK(normalize_s1xs2({0, {}, {}}) == zpow(0));
  // doubled dot on one sphere
  CHECK(normalize_s1xs2({2, {1, 1}, {}}).kind == CanonicalBasisElem::Kind::Zero);
  // extras scale the answer through their ball evaluation
  CHECK(normalize_s1xs2({2, {}, {{1, 0}}}) == zpow(2, Rational(2)));
  CHECK(normalize_s1xs2({2, {}, {{0, 0}}}).kind == CanonicalBasisElem::Kind::Zero);
  CHECK(normalize_s1xs2({3, {1, 2, 3}, {}}) == e0());
  // non-adjacent pair picks up the shift sign
  CHECK(normalize_s1xs2({3, {1, 3}, {}}) == zpow(1, Rational(-1)));
  CHECK_THROWS_AS(normalize_s1xs2({2, {5}, {}}), DomainError);
}

TEST_CASE("s1xs2 normalizer agrees with the exhaustive oracle on small states") {
  for (int k = 0; k <= 3; ++k) {
    // enumerate dot multisets of size <= 2 over positions 1..k
    std::vector<std::vector<int>> dotsets = {{}};
    for (int a = 1; a <= k; ++a) {
      dotsets.push_back({a});
      for (int b = a; b <= k; ++b) dotsets.push_back({a, b});
    }
    for (const auto& dots : dotsets) {
      S1xS2State s{k, dots, {}};
      State terminal = oracle_terminal(encode_s1xs2(s), s1xs2_model_generator());
      CHECK(terminal == basis_to_state(normalize_s1xs2(s)));
    }
  }
}

TEST_CASE("t3 normal forms") {
  T3State white{{1, 0, 0}, 2, {}, {}};
  CanonicalBasisElem w = normalize_t3(white);
  CHECK(w.kind == CanonicalBasisElem::Kind::T3White);
  CHECK(w.power == 2);
  CHECK(w.coeff == Rational(1));

  T3State dotted{{0, 1, 1}, 1, {1}, {}};
  CanonicalBasisElem d = normalize_t3(dotted);
  CHECK(d.kind == CanonicalBasisElem::Kind::T3Dotted);
  CHECK(d.direction == std::array<int, 3>{0, 1, 1});

  CHECK(normalize_t3({{1, 0, 0}, 2, {1, 2}, {}}).kind == CanonicalBasisElem::Kind::Zero);
  CHECK(normalize_t3({{1, 0, 0}, 2, {1}, {}}).kind == CanonicalBasisElem::Kind::Zero);
  CHECK(normalize_t3({{1, 0, 0}, 0, {}, {}}).kind == CanonicalBasisElem::Kind::Empty);
  CHECK(normalize_t3({{-1, 0, 2}, 1, {}, {}}).direction == std::array<int, 3>{1, 0, -2});
  CHECK_THROWS_AS(normalize_t3({{2, 0, 2}, 1, {}, {}}), DomainError);
  CHECK_THROWS_AS(normalize_t3({{0, 0, 0}, 1, {}, {}}), DomainError);
}

TEST_CASE("t3 normalizer agrees with the exhaustive oracle on small states") {
  for (int k = 0; k <= 3; ++k) {
    std::vector<std::vector<int>> dotsets = {{}};
    for (int a = 1; a <= k; ++a) {
      dotsets.push_back({a});
      for (int b = a; b <= k; ++b) dotsets.push_back({a, b});
    }
    for (const auto& dots : dotsets) {
      T3State s{{1, 0, 0}, k, dots, {}};
      State terminal = oracle_terminal(encode_t3(s), t3_model_generator());
      CHECK(terminal == basis_to_state(normalize_t3(s)));
    }
  }
}

TEST_CASE("dual functional values") {
  CHECK(functional_E({1, {1}, {}}) == Rational(1));
  CHECK(functional_E({1, {}, {}}) == Rational(0));
  CHECK(functional_E({4, {}, {}}) == Rational(0));
  CHECK(functional_E({1, {1}, {{1, 0}}}) == Rational(1, 2));
  CHECK(functional_E({1, {1}, {{1, 0}, {1, 0}}}) == Rational(1, 4));
  CHECK(functional_E({1, {1}, {{0, 1}}}) == Rational(1));
  CHECK(functional_E({1, {1}, {{0, 0}}}) == Rational(0));
  CHECK(functional_E({1, {1}, {{2, 0}}}) == Rational(0));
  CHECK(functional_E({3, {1}, {}}) == Rational(0));
  // the class of three dotted parallels reduces to e_0
  CHECK(functional_E({3, {1, 2, 3}, {}}) == Rational(1));
  CHECK(functional_E_state(encode_s1xs2({1, {1}, {{1, 0}}})) == Rational(1, 2));
}

TEST_CASE("dual functional vanishes on sampled rewrite instances") {
  std::mt19937 rng(20240812);
  std::uniform_int_distribution<int> kdist(0, 4), extra_genus(0, 2), extra_dots(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    S1xS2State s;
    s.spheres = kdist(rng);
    if (s.spheres > 0) {
      std::uniform_int_distribution<int> pos(1, s.spheres);
      int nd = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < nd; ++i) s.dots.push_back(pos(rng));
    }
    int ne = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < ne; ++i) s.extras.emplace_back(extra_genus(rng), extra_dots(rng));
    State st = encode_s1xs2(s);
    for (const auto& inst : e_checkable_instances(st)) {
      State unit = State::term(inst.target, Rational(1));
      CHECK(functional_E_state(unit) == functional_E_state(inst.replacement));
      ++checked;
    }
  }
  CHECK(checked > 100);
}
