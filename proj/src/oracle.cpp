#include "bnskein/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bnskein {
namespace core {

const char* relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::TwoDots: return "two-dots";
    case RelationKind::NeckCut: return "neck-cut";
    case RelationKind::WhiteSphere: return "white-sphere";
    case RelationKind::DottedSphere: return "dotted-sphere";
    case RelationKind::HandleTube: return "handle-tube";
    case RelationKind::DotShift: return "dot-shift";
    case RelationKind::PairDelete: return "pair-delete";
    case RelationKind::RotationKill: return "rotation-kill";
    case RelationKind::BandSum: return "band-sum";
    case RelationKind::Desing: return "de-sing";
  }
  return "unknown";
}

State apply_instance(const State& s, const RelationInstance& inst) {
  auto key = normalized(inst.target);
  auto it = s.terms().find(key);
  if (it == s.terms().end())
    throw DomainError(std::string(relation_kind_name(inst.kind)) + " instance at " + inst.site +
                      " targets a term absent from the state");
  ring::Rational c = it->second;
  State r = s;
  r.add(key, -c);
  return r + inst.replacement.scaled(c);
}

ClosureResult oracle_rewrite_closure(const State& start, const InstanceGenerator& gen,
                                     int max_depth, size_t max_states) {
  ClosureResult result;
  std::set<State> visited;
  std::deque<std::pair<State, int>> queue;
  visited.insert(start);
  queue.emplace_back(start, 0);
  result.complete = true;

  while (!queue.empty()) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    std::vector<RelationInstance> instances = gen(state);
    if (instances.empty()) {
      result.terminal.push_back(state);
      continue;
    }
    for (const auto& inst : instances) {
      State next = apply_instance(state, inst);
      if (visited.count(next)) continue;
      if (depth >= max_depth || visited.size() >= max_states) {
        result.complete = false;
        continue;
      }
      visited.insert(next);
      queue.emplace_back(next, depth + 1);
    }
  }

  result.reachable.assign(visited.begin(), visited.end());
  std::sort(result.terminal.begin(), result.terminal.end());
  result.terminal.erase(std::unique(result.terminal.begin(), result.terminal.end()),
                        result.terminal.end());
  return result;
}

bool closure_is_confluent(const ClosureResult& r) {
  if (!r.complete) return false;
  if (r.terminal.empty()) return false;
  return std::all_of(r.terminal.begin(), r.terminal.end(),
                     [&](const State& t) { return t == r.terminal.front(); });
}

}  // namespace core
}  // namespace bnskein
