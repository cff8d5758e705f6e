#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bnskein/oracle.hpp"
#include "bnskein/state.hpp"

namespace bnskein {
namespace evals {

// A closed surface in the three-sphere: components given as (genus, dots).
struct S3Surface {
  std::vector<std::pair<int, int>> components;
};

/*
 * A state in S^1 x S^2: k parallel homologically essential spheres
 * indexed 1..k along the circle direction, a multiset of dot positions,
 * and trivial leftovers (genus, dots) sitting inside balls.
 */
struct S1xS2State {
  int spheres = 0;
  std::vector<int> dots;
  std::vector<std::pair<int, int>> extras;
};

/*
 * A pure state in the three-torus: k parallel copies of the essential
 * torus in a primitive direction (p,q,r), dotted at the listed indices,
 * plus trivial extras.  Directions are normalized so the first nonzero
 * entry is positive; (p,q,r) and (-p,-q,-r) name the same torus.
 */
struct T3State {
  std::array<int, 3> direction = {0, 0, 0};
  int count = 0;
  std::vector<int> dots;
  std::vector<std::pair<int, int>> extras;
};

std::array<int, 3> normalize_direction(std::array<int, 3> dir);

struct CanonicalBasisElem {
  enum class Kind { Zero, Empty, ZPow, E0, T3White, T3Dotted };

  Kind kind = Kind::Zero;
  ring::Rational coeff;
  int power = 0;
  std::array<int, 3> direction = {0, 0, 0};

  static CanonicalBasisElem zero() { return {}; }

  bool operator==(const CanonicalBasisElem& o) const;

  // "0", or "COEFF * BASIS" with basis one of: empty, z^k, e0,
  // T[p,q,r]^k, dT[p,q,r].
  std::string to_string() const;
};

// Coefficient of the empty surface: the product over components of
// v(g,d), where v(g,d) = 2^g when g + d = 1 and 0 otherwise.
ring::Rational eval_s3(const S3Surface& surf);

CanonicalBasisElem normalize_s1xs2(const S1xS2State& s);
CanonicalBasisElem normalize_t3(const T3State& s);

/*
 * The dual functional separating e_0 from the z^k: sends the class of
 * e_0 to 1 and every z^k to 0.  Trivial extras contribute a factor per
 * component: a once-dotted sphere gives 1, a white torus gives 1/2,
 * anything else kills the value.
 */
ring::Rational functional_E(const S1xS2State& s);

// functional_E extended linearly to formal sums in the S^1 x S^2
// component labeling ("es#NN" / "trivial-sphere" / "loc").
ring::Rational functional_E_state(const core::State& s);

// Encodings into the generic term language.  Essential spheres become
// "es#NN", vertical tori "vt#NN"; trivial extras become "trivial-sphere"
// when genus 0 and "loc" otherwise.
core::State encode_s3(const S3Surface& surf);
core::State encode_s1xs2(const S1xS2State& s);
core::State encode_t3(const T3State& s);

// The same basis element as a formal sum, for oracle comparisons.
core::State basis_to_state(const CanonicalBasisElem& e);

/*
 * Rewrite-rule generators for the three model manifolds, feeding
 * oracle_rewrite_closure.  Terminal states of each system are exactly
 * the canonical forms the corresponding normalizer produces.
 */
core::InstanceGenerator s3_model_generator();
core::InstanceGenerator s1xs2_model_generator();
core::InstanceGenerator t3_model_generator();

// s1xs2 instances on which the literal dual functional is checked; skips
// compressions of white trivial tori, whose factor convention is not a
// module invariant.
std::vector<core::RelationInstance> e_checkable_instances(const core::State& s);

}  // namespace evals
}  // namespace bnskein
