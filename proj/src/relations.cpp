#include "bnskein/relations.hpp"

#include <algorithm>

namespace bnskein {
namespace core {

namespace {

const char kTrivialSphere[] = "trivial-sphere";

bool has_double_dot(const ComponentMultiset& comps) {
  return std::any_of(comps.begin(), comps.end(),
                     [](const SurfaceComponent& c) { return c.dots >= 2; });
}

// Looks up the coefficient of `term` in s, which must be stored.
ring::Rational coeff_of(const State& s, const ComponentMultiset& term) {
  auto key = normalized(term);
  auto it = s.terms().find(key);
  if (it == s.terms().end())
    throw DomainError("rewrite target " + config_to_string(key) + " is not a term of the state");
  return it->second;
}

// s with `term` removed and coeff * replacement added in its place.
State substitute(const State& s, const ComponentMultiset& term, const State& replacement) {
  ring::Rational c = coeff_of(s, term);
  State r = s;
  r.add(term, -c);
  return r + replacement.scaled(c);
}

const SurfaceComponent& component_at(const ComponentMultiset& term, size_t i) {
  if (i >= term.size()) throw DomainError("component index out of range");
  return term[i];
}

ComponentMultiset without_index(const ComponentMultiset& term, size_t i) {
  ComponentMultiset rest;
  rest.reserve(term.size() - 1);
  for (size_t j = 0; j < term.size(); ++j)
    if (j != i) rest.push_back(term[j]);
  return rest;
}

}  // namespace

State apply_two_dot_rule(const State& s) {
  State r;
  for (const auto& [comps, c] : s.terms())
    if (!has_double_dot(comps)) r.add(comps, c);
  return r;
}

State remove_trivial_spheres(const State& s) {
  State r;
  for (const auto& [comps, c] : s.terms()) {
    bool dead = false;
    ComponentMultiset kept;
    for (const auto& comp : comps) {
      if (comp.label == kTrivialSphere && comp.genus == 0 && comp.dots == 0) {
        dead = true;
        break;
      }
      if (comp.label == kTrivialSphere && comp.genus == 0 && comp.dots == 1) continue;
      kept.push_back(comp);
    }
    if (!dead) r.add(kept, c);
  }
  return r;
}

State graded_reduce(const State& s, int m) {
  if (m < 0) throw DomainError("negative level");
  State r;
  for (const auto& [comps, c] : s.terms()) {
    int level = static_cast<int>(comps.size());
    if (level > m)
      throw DomainError("term " + config_to_string(comps) + " lies above level " +
                        std::to_string(m));
    if (level == m) r.add(comps, c);
  }
  return r;
}

State neck_cut(const State& s, const ComponentMultiset& term, size_t comp_index,
               const CutOutcome& cut) {
  const SurfaceComponent& target = component_at(term, comp_index);
  if (cut.pieces.empty() || cut.pieces.size() > 2)
    throw DomainError("compression must yield one or two pieces");
  if (cut.dot_side_a >= cut.pieces.size() || cut.dot_side_b >= cut.pieces.size())
    throw DomainError("dot side indexes a missing piece");
  if (cut.pieces.size() == 1 && cut.dot_side_a != cut.dot_side_b)
    throw DomainError("non-separating cut has both sides on its single piece");
  if (cut.pieces.size() == 2 && cut.dot_side_a == cut.dot_side_b)
    throw DomainError("separating cut must dot the two pieces separately");
  int chi = 0, dots = 0;
  for (const auto& p : cut.pieces) {
    chi += euler_char(p);
    dots += p.dots;
  }
  if (chi != euler_char(target) + 2)
    throw DomainError("compression must raise Euler characteristic by exactly 2");
  if (dots != target.dots) throw DomainError("compression outcome changes the dot count");

  ComponentMultiset rest = without_index(term, comp_index);
  State replacement;
  for (size_t side : {cut.dot_side_a, cut.dot_side_b}) {
    ComponentMultiset summand = rest;
    for (size_t j = 0; j < cut.pieces.size(); ++j) {
      SurfaceComponent piece = cut.pieces[j];
      if (j == side) piece.dots += 1;
      summand.push_back(piece);
    }
    replacement.add(summand, ring::Rational(1));
  }
  return substitute(s, term, replacement);
}

State handle_tube_forward(const State& s, const ComponentMultiset& term, size_t comp_index,
                          ring::CoeffRing ring_mode) {
  SurfaceComponent comp = component_at(term, comp_index);
  if (comp.dots < 1) throw DomainError("handle rule forward needs a dotted component");
  ComponentMultiset out = without_index(term, comp_index);
  comp.genus += 1;
  comp.dots -= 1;
  out.push_back(comp);
  State replacement = State::term(out, ring::halve(ring::Rational(1), ring_mode, "handle rule"));
  return substitute(s, term, replacement);
}

State handle_tube_backward(const State& s, const ComponentMultiset& term, size_t comp_index) {
  SurfaceComponent comp = component_at(term, comp_index);
  if (comp.genus < 1) throw DomainError("handle rule backward needs genus >= 1");
  ComponentMultiset out = without_index(term, comp_index);
  comp.genus -= 1;
  comp.dots += 1;
  out.push_back(comp);
  State replacement = State::term(out, ring::Rational(2));
  return substitute(s, term, replacement);
}

State parallel_dot_shift(const State& s, const ComponentMultiset& term, size_t from, size_t to) {
  SurfaceComponent a = component_at(term, from);
  SurfaceComponent b = component_at(term, to);
  if (from == to) throw DomainError("dot shift needs two distinct components");
  if (a.dots != 1) throw DomainError("dot shift source must carry exactly one dot");
  if (b.dots != 0) throw DomainError("dot shift target must be white");
  ComponentMultiset out = term;
  out[from].dots = 0;
  out[to].dots = 1;
  return substitute(s, term, State::term(out, ring::Rational(-1)));
}

State parallel_dotted_pair_delete(const State& s, const ComponentMultiset& term, size_t i0,
                                  size_t i1) {
  if (i0 == i1) throw DomainError("pair delete needs two distinct components");
  SurfaceComponent a = component_at(term, i0);
  SurfaceComponent b = component_at(term, i1);
  if (a.dots != 1 || b.dots != 1)
    throw DomainError("pair delete needs both components dotted once");
  if (a.genus != b.genus) throw DomainError("parallel components must share their genus");
  if (a.genus >= 1) return substitute(s, term, State::zero());
  ComponentMultiset out;
  for (size_t j = 0; j < term.size(); ++j)
    if (j != i0 && j != i1) out.push_back(term[j]);
  return substitute(s, term, State::term(out, ring::Rational(1)));
}

}  // namespace core
}  // namespace bnskein
