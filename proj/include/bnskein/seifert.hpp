#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bnskein/ring.hpp"
#include "bnskein/sbn.hpp"

namespace bnskein {
namespace seifert {

/*
 * A Seifert fibered space over a closed orientable base surface: the
 * genus of the decomposition surface plus the (p, q) pair of each
 * singular fiber.  Only orientable total spaces over orientable bases
 * are in scope; the flags exist so rejection is explicit rather than
 * silent.  The q values are carried verbatim for reporting; no
 * operation consumes them.
 */
struct SeifertData {
  int base_genus = 0;
  std::vector<std::pair<int, int>> singular_fibers;
  bool total_space_orientable = true;
  bool base_orientable = true;
};

// Rejects negative genus, any fiber with |p| <= 1, and nonorientable
// flags.
void validate_data(const SeifertData& m);

/*
 * An isotopy class of connected horizontal surfaces.  Which classes
 * exist is genuine algebraic topology outside this engine, so the
 * caller supplies each one as an opaque token together with the two
 * numbers the module structure depends on: the covering degree over
 * the base (positive by convention) and the genus of the surface
 * itself, which decides how a dotted adjacent pair of parallel copies
 * dies.
 */
struct HorizontalClass {
  std::string token;
  int degree = 1;
  int genus = 0;
};

// Rejects an empty token, degree <= 0, or negative genus.
void validate_class(const HorizontalClass& f);

// k parallel copies of one horizontal class, dotted at 1-based copy
// positions (a multiset; repeats mean multiple dots on one copy).
struct HorizontalState {
  HorizontalClass cls;
  int copies = 0;
  std::vector<int> dots;
};

/*
 * Canonical form of a horizontal state: zero, a white stack of parallel
 * copies (power 0 is the empty surface), or the single dotted copy d_f.
 */
struct HorizontalCanonical {
  enum class Kind { Zero, Copies, Dotted };

  Kind kind = Kind::Zero;
  ring::Rational coeff;
  std::string token;
  int copies = 0;

  static HorizontalCanonical zero() { return {}; }

  bool operator==(const HorizontalCanonical& o) const;
  bool operator!=(const HorizontalCanonical& o) const { return !(*this == o); }

  // "0", or "COEFF * BASIS" with basis "empty", "TOKEN^k", or "d_TOKEN".
  std::string to_string() const;
};

/*
 * Rewrites a stack of parallel horizontal copies to canonical form.
 * A doubly dotted copy kills the state.  Singly dotted copies pair up
 * left to right: on a genus-0 class each adjacent dotted pair deletes
 * two copies at a sign per intermediate shift, leaving a white stack
 * (even dot count) or the lone dotted copy d_f when every copy is
 * dotted (odd count); a lone dot among undotted companions dies by
 * rotating it around the fiber direction.  On a class of positive
 * genus a met dotted pair has a positive-genus component between its
 * dots, so any state with two or more dots is zero, and only k = 1
 * supports a single dot.
 */
HorizontalCanonical normalize_horizontal(const HorizontalState& s);

// One direct summand of the horizontal part, described per class.
struct HorizontalSummand {
  HorizontalClass cls;
  std::string description;
};

/*
 * The module structure of a Seifert fibered space: a vertical summand,
 * which is the surface skein module of the base with one marked point
 * per singular fiber, plus one independent summand per horizontal
 * class.  Fibers and classes are reported in sorted order so the
 * report does not depend on input order.
 */
struct BnStructureReport {
  SeifertData data;
  sbn::SurfaceSpec vertical;
  std::vector<HorizontalSummand> horizontal;

  std::string to_string() const;
};

BnStructureReport bn_decompose(const SeifertData& m,
                               std::vector<HorizontalClass> horiz);

/*
 * Consistency report for the functional that detects a vertical lift
 * inside its graded piece: the value on a state matching the reference
 * lift is (-1)^l (1/2)^k, with l the number of dot shifts back to the
 * reference position and k the count of white trivial tori riding
 * along.  Each sample builds the two dotted sides and the merged side
 * of a neck-cut instance and checks that the functional of the merged
 * side equals the sum over the dotted sides.
 */
struct LiftCheckReport {
  int samples = 0;
  int violations = 0;
  std::vector<std::string> violation_sites;
};

LiftCheckReport vertical_lift_consistency(const sbn::SurfaceSpec& spec,
                                          int samples, unsigned seed = 1);

}  // namespace seifert
}  // namespace bnskein
