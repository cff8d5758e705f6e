#include "bnskein/evaluators.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace bnskein {
namespace evals {

using core::ComponentMultiset;
using core::RelationInstance;
using core::RelationKind;
using core::State;
using core::SurfaceComponent;
using ring::Rational;

namespace {

constexpr const char* kTrivialSphere = "trivial-sphere";
constexpr const char* kLocal = "loc";

Rational v_s3(int genus, int dots) {
  if (genus < 0 || dots < 0) throw DomainError("negative genus or dots");
  if (genus + dots != 1) return Rational(0);
  return Rational(2).pow(genus);
}

std::string indexed_label(const char* prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s#%02d", prefix, i);
  return buf;
}

// Per-sphere dot counts from a 1-based multiset of positions.
std::vector<int> dot_counts(int k, const std::vector<int>& dots) {
  std::vector<int> counts(static_cast<size_t>(k), 0);
  for (int pos : dots) {
    if (pos < 1 || pos > k)
      throw DomainError("dot position " + std::to_string(pos) + " outside 1.." +
                        std::to_string(k));
    counts[static_cast<size_t>(pos) - 1] += 1;
  }
  return counts;
}

// Sign collected while shifting each consecutive pair of dotted indices
// together before deleting it: (-1)^(gap-1) per pair.
int pairing_sign(const std::vector<int>& dotted_sorted) {
  int shifts = 0;
  for (size_t i = 0; i + 1 < dotted_sorted.size(); i += 2)
    shifts += dotted_sorted[i + 1] - dotted_sorted[i] - 1;
  return shifts % 2 == 0 ? 1 : -1;
}

struct EssentialShape {
  int k = 0;
  std::vector<int> dotted;  // sorted positions carrying exactly one dot
  bool double_dot = false;
};

EssentialShape essential_shape(int k, const std::vector<int>& dots) {
  EssentialShape shape;
  shape.k = k;
  std::vector<int> counts = dot_counts(k, dots);
  for (int i = 0; i < k; ++i) {
    if (counts[static_cast<size_t>(i)] >= 2) shape.double_dot = true;
    if (counts[static_cast<size_t>(i)] == 1) shape.dotted.push_back(i + 1);
  }
  return shape;
}

}  // namespace

std::array<int, 3> normalize_direction(std::array<int, 3> dir) {
  if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0)
    throw DomainError("direction triple must not be all zero");
  int g = std::gcd(std::gcd(std::abs(dir[0]), std::abs(dir[1])), std::abs(dir[2]));
  if (g != 1) throw DomainError("direction triple must be primitive");
  for (int c : dir) {
    if (c > 0) break;
    if (c < 0) {
      for (auto& x : dir) x = -x;
      break;
    }
  }
  return dir;
}

bool CanonicalBasisElem::operator==(const CanonicalBasisElem& o) const {
  return kind == o.kind && coeff == o.coeff && power == o.power && direction == o.direction;
}

std::string CanonicalBasisElem::to_string() const {
  if (kind == Kind::Zero) return "0";
  std::ostringstream out;
  out << coeff.to_string() << " * ";
  switch (kind) {
    case Kind::Zero: break;
    case Kind::Empty: out << "empty"; break;
    case Kind::ZPow: out << "z^" << power; break;
    case Kind::E0: out << "e0"; break;
    case Kind::T3White:
      out << "T[" << direction[0] << "," << direction[1] << "," << direction[2] << "]^" << power;
      break;
    case Kind::T3Dotted:
      out << "dT[" << direction[0] << "," << direction[1] << "," << direction[2] << "]";
      break;
  }
  return out.str();
}

Rational eval_s3(const S3Surface& surf) {
  Rational acc(1);
  for (const auto& [g, d] : surf.components) acc *= v_s3(g, d);
  return acc;
}

CanonicalBasisElem normalize_s1xs2(const S1xS2State& s) {
  if (s.spheres < 0) throw DomainError("negative sphere count");
  Rational factor = eval_s3(S3Surface{s.extras});
  EssentialShape shape = essential_shape(s.spheres, s.dots);
  if (factor.is_zero() || shape.double_dot) return CanonicalBasisElem::zero();

  int d = static_cast<int>(shape.dotted.size());
  CanonicalBasisElem out;
  if (d % 2 == 0) {
    int sign = pairing_sign(shape.dotted);
    out.coeff = factor * Rational(sign);
    out.power = shape.k - d;
    out.kind = out.power == 0 ? CanonicalBasisElem::Kind::Empty : CanonicalBasisElem::Kind::ZPow;
    return out;
  }
  if (shape.k > d) return CanonicalBasisElem::zero();
  // every sphere dotted, an odd number of them: reduces to e_0 with sign +
  out.kind = CanonicalBasisElem::Kind::E0;
  out.coeff = factor;
  return out;
}

CanonicalBasisElem normalize_t3(const T3State& s) {
  if (s.count < 0) throw DomainError("negative torus count");
  std::array<int, 3> dir = normalize_direction(s.direction);
  Rational factor = eval_s3(S3Surface{s.extras});
  EssentialShape shape = essential_shape(s.count, s.dots);
  if (factor.is_zero() || shape.double_dot) return CanonicalBasisElem::zero();

  int d = static_cast<int>(shape.dotted.size());
  CanonicalBasisElem out;
  out.direction = dir;
  if (d == 0) {
    if (shape.k == 0) {
      out.kind = CanonicalBasisElem::Kind::Empty;
      out.direction = {0, 0, 0};
    } else {
      out.kind = CanonicalBasisElem::Kind::T3White;
      out.power = shape.k;
    }
    out.coeff = factor;
    return out;
  }
  if (d == 1 && shape.k == 1) {
    out.kind = CanonicalBasisElem::Kind::T3Dotted;
    out.coeff = factor;
    return out;
  }
  // one dot among several tori dies by rotation; two dots meet and the
  // dotted pair has positive genus
  return CanonicalBasisElem::zero();
}

Rational functional_E(const S1xS2State& s) {
  EssentialShape shape = essential_shape(s.spheres, s.dots);
  if (shape.double_dot) return Rational(0);
  int d = static_cast<int>(shape.dotted.size());
  if (!(d == shape.k && d % 2 == 1)) return Rational(0);
  Rational acc(1);
  for (const auto& [g, dd] : s.extras) {
    if (g == 0 && dd == 1) continue;
    if (g == 1 && dd == 0) {
      acc *= Rational(1, 2);
      continue;
    }
    return Rational(0);
  }
  return acc;
}

Rational functional_E_state(const State& s) {
  Rational total(0);
  for (const auto& [comps, coeff] : s.terms()) {
    int k = 0, d = 0;
    bool dead = false;
    Rational factor(1);
    for (const auto& c : comps) {
      if (c.label.rfind("es#", 0) == 0) {
        if (c.genus != 0) throw DomainError("essential sphere with genus");
        if (c.dots >= 2) dead = true;
        k += 1;
        d += c.dots;
      } else if (c.label == kTrivialSphere || c.label == kLocal) {
        if (c.genus == 0 && c.dots == 1) continue;
        if (c.genus == 1 && c.dots == 0) {
          factor *= Rational(1, 2);
          continue;
        }
        dead = true;
      } else {
        throw DomainError("component '" + c.label + "' is not in the S1xS2 labeling");
      }
    }
    if (dead || !(d == k && d % 2 == 1)) continue;
    total += coeff * factor;
  }
  return total;
}

State encode_s3(const S3Surface& surf) {
  ComponentMultiset comps;
  for (const auto& [g, d] : surf.components) {
    if (g < 0 || d < 0) throw DomainError("negative genus or dots");
    comps.push_back({g == 0 ? kTrivialSphere : kLocal, g, d});
  }
  return State::term(comps, Rational(1));
}

State encode_s1xs2(const S1xS2State& s) {
  if (s.spheres > 99) throw DomainError("at most 99 essential spheres supported");
  std::vector<int> counts = dot_counts(s.spheres, s.dots);
  ComponentMultiset comps;
  for (int i = 1; i <= s.spheres; ++i)
    comps.push_back({indexed_label("es", i), 0, counts[static_cast<size_t>(i) - 1]});
  for (const auto& [g, d] : s.extras) comps.push_back({g == 0 ? kTrivialSphere : kLocal, g, d});
  return State::term(comps, Rational(1));
}

State encode_t3(const T3State& s) {
  if (s.count > 99) throw DomainError("at most 99 parallel tori supported");
  std::vector<int> counts = dot_counts(s.count, s.dots);
  ComponentMultiset comps;
  for (int i = 1; i <= s.count; ++i)
    comps.push_back({indexed_label("vt", i), 1, counts[static_cast<size_t>(i) - 1]});
  for (const auto& [g, d] : s.extras) comps.push_back({g == 0 ? kTrivialSphere : kLocal, g, d});
  return State::term(comps, Rational(1));
}

State basis_to_state(const CanonicalBasisElem& e) {
  using Kind = CanonicalBasisElem::Kind;
  ComponentMultiset comps;
  switch (e.kind) {
    case Kind::Zero: return State::zero();
    case Kind::Empty: break;
    case Kind::ZPow:
      for (int i = 1; i <= e.power; ++i) comps.push_back({indexed_label("es", i), 0, 0});
      break;
    case Kind::E0: comps.push_back({indexed_label("es", 1), 0, 1}); break;
    case Kind::T3White:
      for (int i = 1; i <= e.power; ++i) comps.push_back({indexed_label("vt", i), 1, 0});
      break;
    case Kind::T3Dotted: comps.push_back({indexed_label("vt", 1), 1, 1}); break;
  }
  return State::term(comps, e.coeff);
}

namespace {

enum class Model { s3, s1xs2, t3 };

// Essential components of a configuration in index order, returned as
// (position-in-multiset, family index) pairs; family labels are
// contiguous es#01..es#0k (or vt#) by construction.
std::vector<std::pair<size_t, int>> family_members(const ComponentMultiset& comps,
                                                   const char* prefix) {
  std::vector<std::pair<size_t, int>> out;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].label.rfind(prefix, 0) == 0) {
      int idx = std::stoi(comps[i].label.substr(3));
      out.emplace_back(i, idx);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

ComponentMultiset erase_positions(const ComponentMultiset& comps, size_t a, size_t b) {
  ComponentMultiset out;
  for (size_t i = 0; i < comps.size(); ++i)
    if (i != a && i != b) out.push_back(comps[i]);
  return out;
}

// Relabels a parallel family contiguously after deletions.
ComponentMultiset relabel_family(ComponentMultiset comps, const char* prefix) {
  std::vector<size_t> members;
  for (size_t i = 0; i < comps.size(); ++i)
    if (comps[i].label.rfind(prefix, 0) == 0) members.push_back(i);
  std::sort(members.begin(), members.end(), [&](size_t a, size_t b) {
    return comps[a].label < comps[b].label;
  });
  int next = 1;
  for (size_t i : members) comps[i].label = indexed_label(prefix, next++);
  return comps;
}

void add_extras_instances(const ComponentMultiset& comps, bool skip_white_torus_cuts,
                          std::vector<RelationInstance>& out) {
  for (size_t i = 0; i < comps.size(); ++i) {
    const SurfaceComponent& c = comps[i];
    if (c.label.rfind("es#", 0) == 0 || c.label.rfind("vt#", 0) == 0) continue;
    std::string site = c.label + " at " + std::to_string(i);
    if (c.dots >= 2) {
      out.push_back({RelationKind::TwoDots, site, comps, State::zero()});
      continue;
    }
    if (c.genus == 1 && c.dots == 0 && skip_white_torus_cuts) continue;
    if (c.genus == 0) {
      if (c.dots == 0) {
        out.push_back({RelationKind::WhiteSphere, site, comps, State::zero()});
      } else {
        ComponentMultiset rest;
        for (size_t j = 0; j < comps.size(); ++j)
          if (j != i) rest.push_back(comps[j]);
        out.push_back({RelationKind::DottedSphere, site, comps, State::term(rest, Rational(1))});
      }
      continue;
    }
    // genus >= 1: compress a handle every available way
    ComponentMultiset rest;
    for (size_t j = 0; j < comps.size(); ++j)
      if (j != i) rest.push_back(comps[j]);
    {
      SurfaceComponent cut = c;
      cut.genus -= 1;
      cut.dots += 1;
      if (cut.genus == 0) cut.label = kTrivialSphere;
      ComponentMultiset next = rest;
      next.push_back(cut);
      out.push_back(
          {RelationKind::NeckCut, site + " non-sep", comps, State::term(next, Rational(2))});
    }
    for (int g1 = 1; g1 <= c.genus / 2; ++g1) {
      int g2 = c.genus - g1;
      for (int d1 = 0; d1 <= c.dots; ++d1) {
        int d2 = c.dots - d1;
        State repl;
        for (int side = 0; side < 2; ++side) {
          ComponentMultiset next = rest;
          next.push_back({kLocal, g1, d1 + (side == 0 ? 1 : 0)});
          next.push_back({kLocal, g2, d2 + (side == 1 ? 1 : 0)});
          repl.add(next, Rational(1));
        }
        out.push_back({RelationKind::NeckCut,
                       site + " sep g1=" + std::to_string(g1) + " d1=" + std::to_string(d1),
                       comps, repl});
      }
    }
  }
}

void add_family_instances(const ComponentMultiset& comps, Model model,
                          std::vector<RelationInstance>& out) {
  const char* prefix = model == Model::t3 ? "vt" : "es";
  auto members = family_members(comps, model == Model::t3 ? "vt#" : "es#");
  int total_dots = 0;
  for (auto [pos, idx] : members) {
    (void)idx;
    if (comps[pos].dots >= 2) {
      out.push_back({RelationKind::TwoDots, comps[pos].label, comps, State::zero()});
      return;
    }
    total_dots += comps[pos].dots;
  }

  int k = static_cast<int>(members.size());
  if (total_dots == 1 && k >= 2)
    out.push_back({RelationKind::RotationKill, "one dot among parallels", comps, State::zero()});

  for (size_t m = 0; m + 1 < members.size(); ++m) {
    auto [pos_a, idx_a] = members[m];
    auto [pos_b, idx_b] = members[m + 1];
    if (idx_b != idx_a + 1)
      throw DomainError("family labels are not contiguous");
    // dot slides one step toward the low end of the family
    if (comps[pos_b].dots == 1 && comps[pos_a].dots == 0) {
      ComponentMultiset next = comps;
      next[pos_b].dots = 0;
      next[pos_a].dots = 1;
      out.push_back({RelationKind::DotShift, comps[pos_b].label + " down", comps,
                     State::term(next, Rational(-1))});
    }
    if (comps[pos_a].dots == 1 && comps[pos_b].dots == 1) {
      if (model == Model::t3) {
        out.push_back({RelationKind::PairDelete, comps[pos_a].label + " pair", comps,
                       State::zero()});
      } else {
        ComponentMultiset next =
            relabel_family(erase_positions(comps, pos_a, pos_b), prefix);
        out.push_back({RelationKind::PairDelete, comps[pos_a].label + " pair", comps,
                       State::term(next, Rational(1))});
      }
    }
  }
}

std::vector<RelationInstance> model_instances(const State& s, Model model,
                                              bool skip_white_torus_cuts) {
  std::vector<RelationInstance> out;
  for (const auto& [comps, coeff] : s.terms()) {
    (void)coeff;
    add_extras_instances(comps, skip_white_torus_cuts, out);
    if (model != Model::s3) add_family_instances(comps, model, out);
  }
  return out;
}

}  // namespace

core::InstanceGenerator s3_model_generator() {
  return [](const State& s) { return model_instances(s, Model::s3, false); };
}

core::InstanceGenerator s1xs2_model_generator() {
  return [](const State& s) { return model_instances(s, Model::s1xs2, false); };
}

core::InstanceGenerator t3_model_generator() {
  return [](const State& s) { return model_instances(s, Model::t3, false); };
}

std::vector<RelationInstance> e_checkable_instances(const State& s) {
  return model_instances(s, Model::s1xs2, true);
}

}  // namespace evals
}  // namespace bnskein
