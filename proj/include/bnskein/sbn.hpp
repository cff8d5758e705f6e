#pragma once

#include <string>
#include <vector>

#include "bnskein/bitclass.hpp"
#include "bnskein/oracle.hpp"
#include "bnskein/ring.hpp"
#include "bnskein/state.hpp"

namespace bnskein {
namespace sbn {

// First homology with Z_2 coefficients of the closed orientable base
// surface, as bit-vectors of length 2*genus.  The zero class is exactly
// the class of a separating curve.
using H1Class = BitClass;

/*
 * The base surface: closed, connected, orientable of genus g, marked
 * with l orbifold points.  The orbifold points are counted, never
 * placed: they enter only through the trivial-circle rules (a circle
 * bounding a blank disk with at most one of them is trivial) and the
 * de-singularization rewrite.
 */
struct SurfaceSpec {
  int genus = 0;
  int singular_points = 0;

  int h1_width() const { return 2 * genus; }
};

// Throws DomainError unless 0 <= genus <= 15 and singular_points >= 0.
void validate_spec(const SurfaceSpec& spec);

/*
 * A stack: a maximal family of parallel circles, pairwise cobounding
 * blank subsurfaces, living in a band.  Circles are ordered 0..weight-1
 * across the band; `dots` lists the positions of dotted circles in
 * strictly increasing order.  A trivial stack consists of circles each
 * bounding a blank disk with at most one singular point; its class must
 * be zero and it is consumed before any graph is formed.
 */
struct Stack {
  H1Class cls;
  int weight = 1;
  std::vector<int> dots;
  bool trivial = false;
};

// Throws DomainError unless the stack is well formed: weight >= 1, dot
// positions strictly increasing and within range, class width matching
// the surface (a trivial stack instead requires the zero class).
void validate_stack(const Stack& s, int width);

/*
 * Incidence data for the complementary regions: regions[r] lists the
 * stacks whose bands border region r, one entry per band side.  Every
 * stack must be claimed by exactly two slots; both slots in one region
 * make the corresponding edge a loop.  Side 0 of a stack (circle
 * position 0) faces the region that lists it first.
 */
using Regions = std::vector<std::vector<int>>;

struct SkeinEdge {
  Stack stack;
  int v0 = 0;
  int v1 = 0;

  bool is_loop() const { return v0 == v1; }
};

// The diagram of a state: vertices are the complementary regions, edges
// are the stacks, with loop flags implied by equal endpoints.
struct SkeinGraph {
  SurfaceSpec spec;
  int vertices = 0;
  std::vector<SkeinEdge> edges;

  long long total_weight() const;
  int dot_count() const;
};

/*
 * Canonical value of a single-dot state in its graded piece.  TypeA is
 * the one-loop graph (n = loop weight, n = 1 or even).  TypeBC covers
 * the two remaining templates: two weight-1 loops of classes e != f,
 * either at one shared vertex (n = 0) or at the two ends of a
 * connecting class-0 edge of weight n.  The pair (e, f) is ordered by
 * dot side: the class of the loop carrying the dot comes first, and a
 * dot on the connecting stack orders the pair (min, max).  The
 * coefficient carries the accumulated dot-shift sign and one factor 2
 * per deleted white trivial circle.
 */
struct DottedCanonical {
  enum class Kind { Zero, TypeA, TypeBC };

  Kind kind = Kind::Zero;
  ring::Rational coeff;
  H1Class e;
  H1Class f;
  int n = 0;

  static DottedCanonical zero() { return DottedCanonical{}; }

  bool operator==(const DottedCanonical& o) const;
  bool operator!=(const DottedCanonical& o) const { return !(*this == o); }
  bool operator<(const DottedCanonical& o) const;

  // "0", or SIGN[MAG*]TEMPLATE: "+TypeA[e=10](n=2)",
  // "-TypeBC[e=10,f=01](n=1)", "+2*TypeA[e=11](n=1)".
  std::string to_string() const;
};

/*
 * Assembles the diagram from stacks and region incidence.  Stacks must
 * be essential (trivial circles are eliminated upstream), class width
 * must match the surface, and every stack must be claimed by exactly
 * two region slots.  Malformed incidence throws DomainError.
 */
SkeinGraph build_graph(const SurfaceSpec& spec, const std::vector<Stack>& stacks,
                       const Regions& regions);

// True iff at every vertex the Z_2 sum of the classes of the incident
// non-loop edges vanishes.  Loops contribute both band sides, hence
// nothing.
bool check_admissible(const SkeinGraph& g);

// True when no vertex joins exactly two distinct non-loop edges.
bool is_reduced(const SkeinGraph& g);

/*
 * Repeatedly merges the two edges at a divalent vertex into one stack
 * (weights add, dot positions carried through; the classes agree by
 * admissibility).  Deterministic: always merges at the lowest-numbered
 * divalent vertex.  The result is reduced and admissible, and does not
 * depend on merge order, with one caveat: a component that is a closed
 * cycle of stacks collapses to a single loop, and the linear dot
 * coordinates on that loop depend on where the cycle is cut open.  The
 * lowest-vertex rule pins one of the equally valid cuts; the choices
 * differ by rotating the dot coordinates, a sign per step downstream.
 * Requires an admissible input.
 */
SkeinGraph reduce_graph(const SkeinGraph& g);

/*
 * The graded vanishing test for a reduced single-dot state at level n.
 * True when any of the following holds:
 *   1. total weight <= n-1 (the state already lives below level n);
 *   2. some region meets more than two distinct circles (a loop of
 *      weight w shows min(w,2) of its circles to its region, a non-loop
 *      end shows one);
 *   3. more than two distinct edges meet at some vertex;
 *   4. some loop has odd weight > 1.
 * Conditions 2-4 are the structural graph forms of the dot-jump
 * arguments; graphs passing all of them but matching no classification
 * template are flagged by classify instead of being silently kept.
 * Unreduced or multi-dot input throws DomainError.
 */
bool is_zero_in_graded(const SkeinGraph& g, int n);

/*
 * Matches a surviving reduced graph against the canonical templates.
 * Requires: reduced, admissible, exactly one dot, total weight == n,
 * and not zero under is_zero_in_graded.  The templates carry their dot
 * at position 0 of its stack, so the returned coefficient is (-1)^q
 * for a dot found at position q (one sign per hop between adjacent
 * circles).  A graph that survives the zero conditions but fits no
 * template throws ClassificationError; that residue is surfaced,
 * never guessed at.
 */
DottedCanonical classify(const SkeinGraph& g, int n);

/*
 * Dimension of the graded piece at level n >= 1 over H = 2^{2g} first
 * homology classes: n = 1 -> H; n odd > 1 -> H*(H-1); n even ->
 * H + H*(H-1).  The index set follows the classification corollary
 * literally and includes the zero class; exclude_zero_class instead
 * counts only templates naming nonzero classes (H-1, (H-1)*(H-2), and
 * their sum), consistent with the vanishing of dotted separating
 * curves.  Both counts are exposed because the source statements are
 * in tension.
 */
long long graded_dimension(const SurfaceSpec& spec, int n, bool exclude_zero_class = false);

/*
 * Canonical representative of a graph up to vertex relabeling, edge
 * reordering, and band reorientation; same_graph compares two graphs
 * via their canonical forms.  Brute-force over vertex permutations,
 * capped at 8 vertices.
 */
SkeinGraph canonical_graph(const SkeinGraph& g);
bool same_graph(const SkeinGraph& a, const SkeinGraph& b);

/*
 * Full normalization of a dotted state given as stacks plus region
 * incidence.  Pipeline: trivial stacks are consumed first (factor 2
 * per white trivial circle; a dotted trivial circle kills the state);
 * a dot on a class-0 stack kills the state (a dotted separating curve
 * vanishes over a ring containing 1/2); two or more dots kill the
 * state (any two circles are joined by a path, and a dot brought next
 * to a dot vanishes); then build -> reduce -> graded zero test ->
 * classify at n = circle count, which shifts the surviving dot to
 * position 0 of its reduced stack at a sign per hop.  The result is
 * the image in the top graded piece, its coefficient the accumulated
 * sign times 2 per deleted white trivial circle.  Region data indexes
 * the full stack list but may not claim a trivial stack (a trivial
 * circle bounds a disk inside one region and carries no incidence).
 * A state with no dot anywhere is rejected.
 */
DottedCanonical dotted_normalize(const SurfaceSpec& spec, const std::vector<Stack>& stacks,
                                 const Regions& regions);

/*
 * Exhaustive check data for the dimension formula: counts distinct
 * classify values over every reduced admissible connected single-dot
 * diagram of total weight n (all class assignments, all dot
 * placements, diagrams deduplicated up to relabeling), plus the number
 * of distinct diagrams whose classification hits the unmatched-template
 * residue.  Residue diagrams are reported, not counted as basis
 * elements.
 */
struct GradedEnumeration {
  long long classified = 0;
  long long residue = 0;
};

GradedEnumeration enumerate_graded(const SurfaceSpec& spec, int n,
                                   bool exclude_zero_class = false);

/*
 * Circle-level oracle encoding.  A circle is rendered as a genus-0
 * component labeled "c<bits>#NN" (trivial circles "triv#NN") so that
 * generic states and oracle_rewrite_closure apply unchanged.
 */
struct SbnCircle {
  H1Class cls;
  int index = 0;
  int dots = 0;
  bool trivial = false;
};

std::string sbn_circle_label(const SbnCircle& c);
core::SurfaceComponent sbn_component(const SbnCircle& c);
core::State sbn_state(const std::vector<SbnCircle>& circles,
                      const ring::Rational& coeff = ring::Rational(1));

/*
 * Applies the local circle relations to every term: a component with
 * two or more dots is zero; a white trivial circle deletes at a factor
 * 2; a dotted trivial circle kills its term.
 */
core::State sbn_cleanup(const core::State& s);

// Caller-supplied result of surgering along a band: one circle when
// two distinct circles merge, two when a circle is summed with itself.
struct BandSpec {
  std::vector<SbnCircle> results;
};

/*
 * The band-sum skein relation as a rewrite instance.
 *
 * Distinct circles, at least one dotted (the moving dot is c1's when
 * both carry one):
 *   {c1*, c2} u rest  ->  -{c1, c2*} u rest + 2 {merged*} u rest,
 * requiring [merged] = [c1] + [c2]; the merged circle collects every
 * dot of the pair, so a doubly dotted pair rewrites to zero.  Same
 * circle, dotted (band from a circle to itself, splitting it):
 *   {c*} u rest  ->  1/2 {r1*, r2} u rest + 1/2 {r1, r2*} u rest,
 * requiring [r1] + [r2] = [c].  Band results are supplied as white
 * descriptors.  Replacements are passed through sbn_cleanup, so
 * trivial result circles contribute their scalar.  Inconsistent
 * classes or an unusable dot pattern throw DomainError.
 */
core::RelationInstance band_sum_relation(const SbnCircle& c1, const SbnCircle& c2,
                                         const BandSpec& band,
                                         const std::vector<SbnCircle>& rest = {});

/*
 * De-singularization step from the separating-curve descent: a dotted
 * circle enclosing singular points is exchanged for the same circle
 * enclosing one fewer (the factor 2 on both sides cancels over the
 * rationals).  Both descriptors must be dotted and of equal class.
 */
core::RelationInstance desing_relation(const SbnCircle& from, const SbnCircle& to,
                                       const std::vector<SbnCircle>& rest = {});

/*
 * Textual front end shared by the CLI and tests.
 *
 * Stacks: '/'-separated entries "class:weight:dots" where class is a
 * bit-string of length 2*genus or the letter t for a trivial stack,
 * weight a positive integer, and dots a comma-separated list of dotted
 * positions (empty for a white stack).  Regions: '/'-separated lists
 * of comma-separated stack indices.
 */
std::vector<Stack> parse_stacks(const std::string& text, int width);
Regions parse_regions(const std::string& text);

}  // namespace sbn
}  // namespace bnskein
