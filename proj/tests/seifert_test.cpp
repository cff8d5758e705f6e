#include "bnskein/seifert.hpp"

#include <string>
#include <vector>

#include "bnskein/errors.hpp"
#include "bnskein/evaluators.hpp"
#include "bnskein/sbn.hpp"
#include "doctest.h"

using namespace bnskein;
using namespace bnskein::seifert;

namespace {

HorizontalClass cls(const std::string& token, int degree, int genus) {
  return HorizontalClass{token, degree, genus};
}

HorizontalState st(const HorizontalClass& f, int copies, std::vector<int> dots = {}) {
  return HorizontalState{f, copies, std::move(dots)};
}

HorizontalCanonical from_basis(const evals::CanonicalBasisElem& e, const std::string& token) {
  using EKind = evals::CanonicalBasisElem::Kind;
  HorizontalCanonical out;
  switch (e.kind) {
    case EKind::Zero:
      return HorizontalCanonical::zero();
    case EKind::Empty:
      out.kind = HorizontalCanonical::Kind::Copies;
      out.copies = 0;
      break;
    case EKind::ZPow:
    case EKind::T3White:
      out.kind = HorizontalCanonical::Kind::Copies;
      out.copies = e.power;
      out.token = token;
      break;
    case EKind::E0:
    case EKind::T3Dotted:
      out.kind = HorizontalCanonical::Kind::Dotted;
      out.token = token;
      break;
  }
  out.coeff = e.coeff;
  return out;
}

// Every dot multiset over positions 1..k with at most max_dots entries.
std::vector<std::vector<int>> dot_multisets(int k, int max_dots) {
  std::vector<std::vector<int>> all = {{}};
  std::vector<std::vector<int>> frontier = {{}};
  for (int size = 1; size <= max_dots; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      int lo = base.empty() ? 1 : base.back();
      for (int pos = lo; pos <= k; ++pos) {
        auto grown = base;
        grown.push_back(pos);
        next.push_back(grown);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

TEST_CASE("seifert data validation") {
  CHECK_NOTHROW(validate_data(SeifertData{0, {}, true, true}));
  CHECK_NOTHROW(validate_data(SeifertData{2, {{2, 1}, {-3, 2}, {5, -4}}, true, true}));
  CHECK_THROWS_AS(validate_data(SeifertData{-1, {}, true, true}), DomainError);
  CHECK_THROWS_AS(validate_data(SeifertData{0, {{1, 1}}, true, true}), DomainError);
  CHECK_THROWS_AS(validate_data(SeifertData{0, {{0, 1}}, true, true}), DomainError);
  CHECK_THROWS_AS(validate_data(SeifertData{0, {{-1, 3}}, true, true}), DomainError);
  CHECK_THROWS_AS(validate_data(SeifertData{0, {}, false, true}), DomainError);
  CHECK_THROWS_AS(validate_data(SeifertData{0, {}, true, false}), DomainError);
}

TEST_CASE("horizontal class validation") {
  CHECK_NOTHROW(validate_class(cls("f", 1, 0)));
  CHECK_NOTHROW(validate_class(cls("fiber-2_a", 7, 3)));
  CHECK_THROWS_AS(validate_class(cls("", 1, 0)), DomainError);
  CHECK_THROWS_AS(validate_class(cls("f:g", 1, 0)), DomainError);
  CHECK_THROWS_AS(validate_class(cls("f,g", 1, 0)), DomainError);
  CHECK_THROWS_AS(validate_class(cls("f g", 1, 0)), DomainError);
  CHECK_THROWS_AS(validate_class(cls("f", 0, 0)), DomainError);
  CHECK_THROWS_AS(validate_class(cls("f", -2, 0)), DomainError);
  CHECK_THROWS_AS(validate_class(cls("f", 1, -1)), DomainError);
}

TEST_CASE("horizontal normal forms") {
  HorizontalClass f0 = cls("f", 2, 0);
  HorizontalClass f1 = cls("h", 1, 1);

  CHECK(normalize_horizontal(st(f0, 4)).to_string() == "1 * f^4");
  CHECK(normalize_horizontal(st(f0, 0)).to_string() == "1 * empty");
  CHECK(normalize_horizontal(st(f0, 1, {1})).to_string() == "1 * d_f");
  CHECK(normalize_horizontal(st(f0, 3, {2})).to_string() == "0");
  CHECK(normalize_horizontal(st(f0, 2, {1, 1})).to_string() == "0");

  CHECK(normalize_horizontal(st(f0, 2, {1, 2})).to_string() == "1 * empty");
  CHECK(normalize_horizontal(st(f0, 3, {1, 3})).to_string() == "-1 * f^1");
  CHECK(normalize_horizontal(st(f0, 3, {1, 2, 3})).to_string() == "1 * d_f");
  CHECK(normalize_horizontal(st(f0, 4, {1, 2, 3, 4})).to_string() == "1 * empty");

  CHECK(normalize_horizontal(st(f1, 3)).to_string() == "1 * h^3");
  CHECK(normalize_horizontal(st(f1, 1, {1})).to_string() == "1 * d_h");
  CHECK(normalize_horizontal(st(f1, 2, {1})).to_string() == "0");
  CHECK(normalize_horizontal(st(f1, 2, {1, 2})).to_string() == "0");
  CHECK(normalize_horizontal(st(f1, 3, {1, 2, 3})).to_string() == "0");

  CHECK_THROWS_AS(normalize_horizontal(st(f0, -1)), DomainError);
  CHECK_THROWS_AS(normalize_horizontal(st(f0, 2, {0})), DomainError);
  CHECK_THROWS_AS(normalize_horizontal(st(f0, 2, {3})), DomainError);
  CHECK_THROWS_AS(normalize_horizontal(st(cls("f", 0, 0), 1)), DomainError);
}

TEST_CASE("genus zero classes track the sphere stack normalizer") {
  HorizontalClass f = cls("f", 1, 0);
  for (int k = 0; k <= 4; ++k) {
    for (const auto& dots : dot_multisets(k, 3)) {
      CAPTURE(k);
      CAPTURE(dots.size());
      auto mine = normalize_horizontal(st(f, k, dots));
      auto reference = evals::normalize_s1xs2(evals::S1xS2State{k, dots, {}});
      CHECK(mine == from_basis(reference, "f"));
    }
  }
}

TEST_CASE("positive genus classes track the torus stack normalizer") {
  HorizontalClass h = cls("h", 3, 1);
  for (int k = 0; k <= 4; ++k) {
    for (const auto& dots : dot_multisets(k, 3)) {
      CAPTURE(k);
      CAPTURE(dots.size());
      auto mine = normalize_horizontal(st(h, k, dots));
      auto reference = evals::normalize_t3(evals::T3State{{1, 0, 0}, k, dots, {}});
      CHECK(mine == from_basis(reference, "h"));
    }
  }
}

TEST_CASE("decomposition report assembles both summands") {
  SUBCASE("torus base, no singular fibers, no horizontal classes") {
    auto report = bn_decompose(SeifertData{1, {}, true, true}, {});
    CHECK(report.vertical.genus == 1);
    CHECK(report.vertical.singular_points == 0);
    CHECK(report.horizontal.empty());
    CHECK(report.to_string().find("graded dimensions n=1..4: 4 16 12 16") != std::string::npos);
  }
  SUBCASE("sphere base, two singular fibers, one horizontal class") {
    auto report = bn_decompose(SeifertData{0, {{2, 1}, {3, -1}}, true, true},
                               {cls("f", 2, 0)});
    CHECK(report.vertical.genus == 0);
    CHECK(report.vertical.singular_points == 2);
    REQUIRE(report.horizontal.size() == 1);
    CHECK(report.horizontal[0].cls.token == "f");
    CHECK(report.horizontal[0].description ==
          "free on {f^k : k >= 0} plus one generator d_f");
  }
  SUBCASE("two horizontal classes give independent summands") {
    auto report = bn_decompose(SeifertData{2, {{2, 1}, {3, 1}, {5, 1}}, true, true},
                               {cls("f2", 4, 2), cls("f1", 2, 0)});
    REQUIRE(report.horizontal.size() == 2);
    CHECK(report.horizontal[0].cls.token == "f1");
    CHECK(report.horizontal[1].cls.token == "f2");
  }
}

TEST_CASE("decomposition report ignores input order") {
  std::vector<HorizontalClass> ab = {cls("a", 1, 0), cls("b", 3, 1)};
  std::vector<HorizontalClass> ba = {cls("b", 3, 1), cls("a", 1, 0)};
  SeifertData fibers_fwd{1, {{2, 1}, {3, -2}}, true, true};
  SeifertData fibers_rev{1, {{3, -2}, {2, 1}}, true, true};
  CHECK(bn_decompose(fibers_fwd, ab).to_string() == bn_decompose(fibers_rev, ba).to_string());
}

TEST_CASE("decomposition rejects bad input") {
  CHECK_THROWS_AS(bn_decompose(SeifertData{0, {{1, 1}}, true, true}, {}), DomainError);
  CHECK_THROWS_AS(bn_decompose(SeifertData{0, {}, false, true}, {}), DomainError);
  CHECK_THROWS_AS(
      bn_decompose(SeifertData{0, {}, true, true}, {cls("f", 1, 0), cls("f", 2, 1)}),
      DomainError);
  CHECK_THROWS_AS(bn_decompose(SeifertData{0, {}, true, true}, {cls("f", -1, 0)}),
                  DomainError);
}

TEST_CASE("reported vertical dimensions agree with the graded formula") {
  auto report = bn_decompose(SeifertData{2, {{2, 1}}, true, true}, {});
  for (int n = 1; n <= 4; ++n) {
    CHECK(report.to_string().find(std::to_string(sbn::graded_dimension(report.vertical, n))) !=
          std::string::npos);
  }
  CHECK(sbn::graded_dimension(report.vertical, 1) == 16);
  CHECK(sbn::graded_dimension(report.vertical, 2) == 256);
  CHECK(sbn::graded_dimension(report.vertical, 3) == 240);
}

TEST_CASE("lift functional is consistent on sampled neck cuts") {
  for (int genus = 0; genus <= 2; ++genus) {
    CAPTURE(genus);
    auto report = vertical_lift_consistency(sbn::SurfaceSpec{genus, genus == 0 ? 3 : 0}, 100);
    CHECK(report.samples == 100);
    CHECK(report.violations == 0);
    CHECK(report.violation_sites.empty());
  }
}

TEST_CASE("lift check rejects bad arguments") {
  CHECK_THROWS_AS(vertical_lift_consistency(sbn::SurfaceSpec{-1, 0}, 10), DomainError);
  CHECK_THROWS_AS(vertical_lift_consistency(sbn::SurfaceSpec{1, 0}, -5), DomainError);
}
