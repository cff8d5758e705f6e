#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bnskein/state.hpp"

namespace bnskein {
namespace core {

enum class RelationKind {
  TwoDots,
  NeckCut,
  WhiteSphere,
  DottedSphere,
  HandleTube,
  DotShift,
  PairDelete,
  RotationKill,
  BandSum,
  Desing,
};

const char* relation_kind_name(RelationKind k);

/*
 * One concrete applicable rewrite: `target` is the term it consumes and
 * `replacement` is what a unit coefficient of that term becomes.  The
 * site string records where the rule acted, for diagnostics only.
 */
struct RelationInstance {
  RelationKind kind;
  std::string site;
  ComponentMultiset target;
  State replacement;
};

// s with the instance's target term removed and coeff * replacement
// added back.  The target must be a stored term of s.
State apply_instance(const State& s, const RelationInstance& inst);

// Enumerates every rewrite applicable to a state.  A state with no
// instances is terminal for the model the generator encodes.
using InstanceGenerator = std::function<std::vector<RelationInstance>(const State&)>;

struct ClosureResult {
  std::vector<State> reachable;  // sorted, deduplicated, includes the start
  std::vector<State> terminal;   // reachable states with no applicable rewrite
  bool complete = false;         // false: bound hit while successors remained
};

/*
 * Breadth-first closure of `start` under the generator, exploring every
 * rewrite order up to `max_depth` rule applications.  When states at the
 * depth limit still have unexplored successors the result is flagged
 * incomplete rather than silently passed off as a closure.  max_states
 * caps the explored set the same way.
 */
ClosureResult oracle_rewrite_closure(const State& start, const InstanceGenerator& gen,
                                     int max_depth, size_t max_states = 200000);

// True when the closure is complete and every terminal state is equal.
// A complete closure of a terminating system always has >= 1 terminal.
bool closure_is_confluent(const ClosureResult& r);

}  // namespace core
}  // namespace bnskein
