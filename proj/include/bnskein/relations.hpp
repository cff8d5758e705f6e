#pragma once

#include <cstddef>

#include "bnskein/state.hpp"

namespace bnskein {
namespace core {

// Deletes every term containing a component with two or more dots.
State apply_two_dot_rule(const State& s);

// Components labeled "trivial-sphere" bound balls away from everything
// else.  Per term: a white trivial sphere kills the term; each trivial
// sphere with exactly one dot is removed with the coefficient kept.
// A trivial sphere with >= 2 dots is left for apply_two_dot_rule.
State remove_trivial_spheres(const State& s);

// Keeps terms with exactly m components, drops those below, and rejects
// any above (that is a grading mistake by the caller, not data).
State graded_reduce(const State& s, int m);

/*
 * Caller-supplied outcome of compressing one component along a curve.
 * The engine checks only the bookkeeping: one or two pieces, total Euler
 * characteristic goes up by exactly 2, dots conserved.  dot_side_a and
 * dot_side_b index the piece receiving the extra dot in each summand;
 * for a non-separating cut both sides land on the single piece.
 */
struct CutOutcome {
  ComponentMultiset pieces;
  size_t dot_side_a = 0;
  size_t dot_side_b = 0;
};

// Replaces `term` (which must be present in s) by the two-summand
// compression of its comp_index-th component.
State neck_cut(const State& s, const ComponentMultiset& term, size_t comp_index,
               const CutOutcome& cut);

// 2 * (dotted component) equals the same component with one more handle
// and one fewer dot.  Forward direction trades a dot for a handle and
// multiplies the coefficient by 1/2 (rationals only); backward trades a
// handle for a dot and doubles it.
State handle_tube_forward(const State& s, const ComponentMultiset& term, size_t comp_index,
                          ring::CoeffRing ring_mode = ring::CoeffRing::rationals);
State handle_tube_backward(const State& s, const ComponentMultiset& term, size_t comp_index);

// Moves the dot from component `from` (dotted) to `to` (white) and
// negates the coefficient.  Parallelism of the two components, with an
// untouched product region between them, is asserted by the caller.
State parallel_dot_shift(const State& s, const ComponentMultiset& term, size_t from, size_t to);

// Both components dotted and parallel: spheres are deleted outright with
// the coefficient kept; positive genus kills the whole term.
State parallel_dotted_pair_delete(const State& s, const ComponentMultiset& term, size_t i0,
                                  size_t i1);

}  // namespace core
}  // namespace bnskein
