#pragma once

#include <map>
#include <string>
#include <vector>

#include "bnskein/ring.hpp"

namespace bnskein {
namespace core {

/*
 * One connected marked surface: an orientable closed component carrying
 * some number of dots.  The label names the isotopy role the component
 * plays in the ambient manifold ("es#03" for the third essential sphere
 * of a parallel family, "vt#01" for a vertical torus, "trivial-sphere"
 * for a component bounding a ball, "loc" for a trivial higher-genus
 * component inside a ball).  Equal labels mean interchangeable position.
 */
struct SurfaceComponent {
  std::string label;
  int genus = 0;
  int dots = 0;

  auto key() const { return std::tie(label, genus, dots); }
  bool operator==(const SurfaceComponent& o) const { return key() == o.key(); }
  bool operator<(const SurfaceComponent& o) const { return key() < o.key(); }
};

// Euler characteristic of a closed orientable genus-g surface.
inline int euler_char(const SurfaceComponent& c) { return 2 - 2 * c.genus; }

// A configuration is the multiset of components of one surface, kept
// sorted so equal configurations compare equal.  Empty = empty surface.
using ComponentMultiset = std::vector<SurfaceComponent>;

ComponentMultiset normalized(ComponentMultiset comps);

std::string config_to_string(const ComponentMultiset& comps);

/*
 * A formal linear combination of configurations.  The zero combination
 * has no terms.  Terms with coefficient zero are removed on insertion.
 */
class State {
public:
  State() = default;

  static State zero() { return State(); }
  static State term(const ComponentMultiset& comps, const ring::Rational& c);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<ComponentMultiset, ring::Rational>& terms() const { return terms_; }

  void add(const ComponentMultiset& comps, const ring::Rational& c);
  State operator+(const State& o) const;
  State operator-() const;
  State operator-(const State& o) const { return *this + (-o); }
  State scaled(const ring::Rational& c) const;

  bool operator==(const State& o) const { return terms_ == o.terms_; }
  bool operator!=(const State& o) const { return !(*this == o); }
  bool operator<(const State& o) const { return terms_ < o.terms_; }

  // One line per term, "COEFF * [label:genus:dots, ...]"; the zero
  // combination prints as the single line "0".
  std::string to_string() const;

  // Inverse of to_string.  Accepts blank lines and '#' comments; the
  // result is re-normalized, so parse(print(s)) == s and printing again
  // is a byte fixpoint.
  static State parse(const std::string& text);

private:
  std::map<ComponentMultiset, ring::Rational> terms_;
};

}  // namespace core
}  // namespace bnskein
