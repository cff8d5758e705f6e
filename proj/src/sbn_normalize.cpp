#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "bnskein/errors.hpp"
#include "bnskein/sbn.hpp"

namespace bnskein {
namespace sbn {

namespace {

bool is_trivial_label(const std::string& label) { return label.rfind("triv#", 0) == 0; }

// Effective homology class: a trivial circle bounds, so it represents
// zero at whatever width the ambient computation uses.
H1Class effective_class(const SbnCircle& c, int width) {
  return c.trivial ? H1Class(0, width) : c.cls;
}

int ambient_width(const std::vector<const SbnCircle*>& cs) {
  for (const SbnCircle* c : cs)
    if (!c->trivial) return c->cls.width;
  return cs.empty() ? 0 : cs.front()->cls.width;
}

core::ComponentMultiset with_rest(std::vector<core::SurfaceComponent> comps,
                                  const std::vector<SbnCircle>& rest) {
  for (const SbnCircle& c : rest) comps.push_back(sbn_component(c));
  return core::normalized(std::move(comps));
}

long long parse_int_token(const std::string& tok, const char* what) {
  if (tok.empty()) throw ParseError(std::string("empty ") + what);
  char* end = nullptr;
  errno = 0;
  long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno != 0 || end != tok.c_str() + tok.size())
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  return v;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

}  // namespace

std::string sbn_circle_label(const SbnCircle& c) {
  if (c.index < 0 || c.index > 99) throw DomainError("circle index out of range (0..99)");
  std::string idx = std::to_string(c.index);
  if (idx.size() < 2) idx.insert(idx.begin(), '0');
  if (c.trivial) return "triv#" + idx;
  return "c" + c.cls.to_string() + "#" + idx;
}

core::SurfaceComponent sbn_component(const SbnCircle& c) {
  if (c.dots < 0) throw DomainError("negative dot count");
  return core::SurfaceComponent{sbn_circle_label(c), 0, c.dots};
}

core::State sbn_state(const std::vector<SbnCircle>& circles, const ring::Rational& coeff) {
  std::vector<core::SurfaceComponent> comps;
  comps.reserve(circles.size());
  for (const SbnCircle& c : circles) comps.push_back(sbn_component(c));
  return core::State::term(core::normalized(std::move(comps)), coeff);
}

core::State sbn_cleanup(const core::State& s) {
  core::State out;
  for (const auto& [comps, coeff] : s.terms()) {
    ring::Rational c = coeff;
    core::ComponentMultiset keep;
    bool dead = false;
    for (const core::SurfaceComponent& comp : comps) {
      if (comp.dots >= 2) {
        dead = true;
        break;
      }
      if (is_trivial_label(comp.label)) {
        if (comp.dots == 1) {
          dead = true;
          break;
        }
        c *= ring::Rational(2);
        continue;
      }
      keep.push_back(comp);
    }
    if (!dead) out.add(core::normalized(std::move(keep)), c);
  }
  return out;
}

core::RelationInstance band_sum_relation(const SbnCircle& c1, const SbnCircle& c2,
                                         const BandSpec& band,
                                         const std::vector<SbnCircle>& rest) {
  for (const SbnCircle& r : band.results)
    if (r.dots != 0) throw DomainError("band results are supplied as white descriptors");

  std::vector<const SbnCircle*> participants = {&c1, &c2};
  for (const SbnCircle& r : band.results) participants.push_back(&r);
  int width = ambient_width(participants);

  core::RelationInstance inst;
  inst.kind = core::RelationKind::BandSum;

  if (sbn_circle_label(c1) == sbn_circle_label(c2)) {
    if (c1.dots != c2.dots) throw DomainError("one circle given with two different dot counts");
    if (c1.dots != 1) throw DomainError("splitting applies to a circle with one dot");
    if (band.results.size() != 2) throw DomainError("splitting a circle yields two circles");
    const SbnCircle& r1 = band.results[0];
    const SbnCircle& r2 = band.results[1];
    if (effective_class(r1, width) + effective_class(r2, width) != effective_class(c1, width))
      throw DomainError("band sum classes are inconsistent");
    inst.site = "split " + sbn_circle_label(c1);
    inst.target = with_rest({sbn_component(c1)}, rest);
    SbnCircle r1d = r1;
    SbnCircle r2d = r2;
    r1d.dots = 1;
    r2d.dots = 1;
    ring::Rational half(1, 2);
    core::State repl;
    repl.add(with_rest({sbn_component(r1d), sbn_component(r2)}, rest), half);
    repl.add(with_rest({sbn_component(r1), sbn_component(r2d)}, rest), half);
    inst.replacement = sbn_cleanup(repl);
    return inst;
  }

  if (band.results.size() != 1) throw DomainError("merging two circles yields one circle");
  if (c1.dots > 1 || c2.dots > 1) throw DomainError("the term is already zero");
  if (c1.dots + c2.dots == 0) throw DomainError("band sum rewrites a dotted pair");
  const SbnCircle& merged = band.results[0];
  if (effective_class(merged, width) !=
      effective_class(c1, width) + effective_class(c2, width))
    throw DomainError("band sum classes are inconsistent");

  const SbnCircle& d = c1.dots == 1 ? c1 : c2;
  const SbnCircle& w = c1.dots == 1 ? c2 : c1;
  inst.site = "band " + sbn_circle_label(d) + " onto " + sbn_circle_label(w);
  inst.target = with_rest({sbn_component(c1), sbn_component(c2)}, rest);

  SbnCircle d_white = d;
  SbnCircle w_dotted = w;
  SbnCircle m_dotted = merged;
  d_white.dots = 0;
  w_dotted.dots = w.dots + 1;
  m_dotted.dots = c1.dots + c2.dots;
  core::State repl;
  repl.add(with_rest({sbn_component(d_white), sbn_component(w_dotted)}, rest),
           ring::Rational(-1));
  repl.add(with_rest({sbn_component(m_dotted)}, rest), ring::Rational(2));
  inst.replacement = sbn_cleanup(repl);
  return inst;
}

core::RelationInstance desing_relation(const SbnCircle& from, const SbnCircle& to,
                                       const std::vector<SbnCircle>& rest) {
  if (from.dots != 1 || to.dots != 1)
    throw DomainError("de-singularization exchanges dotted circles");
  int width = ambient_width({&from, &to});
  if (effective_class(from, width) != effective_class(to, width))
    throw DomainError("de-singularization preserves the class");
  core::RelationInstance inst;
  inst.kind = core::RelationKind::Desing;
  inst.site = "desing " + sbn_circle_label(from) + " -> " + sbn_circle_label(to);
  inst.target = with_rest({sbn_component(from)}, rest);
  core::State repl;
  repl.add(with_rest({sbn_component(to)}, rest), ring::Rational(1));
  inst.replacement = sbn_cleanup(repl);
  return inst;
}

DottedCanonical dotted_normalize(const SurfaceSpec& spec, const std::vector<Stack>& stacks,
                                 const Regions& regions) {
  validate_spec(spec);
  if (stacks.empty()) throw DomainError("a state needs at least one stack");
  for (const Stack& s : stacks) validate_stack(s, spec.h1_width());

  ring::Rational coeff(1);
  std::vector<Stack> essential;
  std::vector<int> remap(stacks.size(), -1);
  int dots = 0;
  for (size_t i = 0; i < stacks.size(); ++i) {
    const Stack& s = stacks[i];
    if (s.trivial) {
      if (!s.dots.empty()) return DottedCanonical::zero();
      coeff *= ring::Rational(2).pow(s.weight);
      continue;
    }
    remap[i] = static_cast<int>(essential.size());
    essential.push_back(s);
    dots += static_cast<int>(s.dots.size());
  }
  if (dots == 0)
    throw DomainError("normalization requires exactly one dot; this state is white");
  if (dots >= 2) return DottedCanonical::zero();
  for (const Stack& s : essential)
    if (!s.dots.empty() && s.cls.is_zero()) return DottedCanonical::zero();

  Regions remapped;
  remapped.reserve(regions.size());
  for (const std::vector<int>& region : regions) {
    std::vector<int> out;
    out.reserve(region.size());
    for (int idx : region) {
      if (idx < 0 || idx >= static_cast<int>(stacks.size()))
        throw DomainError("region refers to a stack that does not exist");
      if (remap[static_cast<size_t>(idx)] < 0)
        throw DomainError("trivial stacks carry no region incidence");
      out.push_back(remap[static_cast<size_t>(idx)]);
    }
    remapped.push_back(std::move(out));
  }

  SkeinGraph g = build_graph(spec, essential, remapped);
  SkeinGraph red = reduce_graph(g);
  int n = static_cast<int>(red.total_weight());
  if (is_zero_in_graded(red, n)) return DottedCanonical::zero();
  DottedCanonical out = classify(red, n);
  out.coeff *= coeff;
  return out;
}

std::vector<Stack> parse_stacks(const std::string& text, int width) {
  if (trimmed(text).empty()) throw ParseError("empty stack list");
  std::vector<Stack> out;
  for (const std::string& raw : split(text, '/')) {
    std::vector<std::string> fields = split(raw, ':');
    if (fields.size() != 3)
      throw ParseError("stack entry needs class:weight:dots, got '" + raw + "'");
    Stack s;
    std::string cls = trimmed(fields[0]);
    if (cls == "t") {
      s.trivial = true;
      s.cls = H1Class(0, width);
    } else {
      s.cls = H1Class::parse(cls);
      if (s.cls.width != width)
        throw ParseError("stack class '" + cls + "' does not have width " +
                         std::to_string(width));
    }
    long long w = parse_int_token(trimmed(fields[1]), "stack weight");
    if (w < 1 || w > 1000000) throw ParseError("stack weight out of range: '" + raw + "'");
    s.weight = static_cast<int>(w);
    std::string dots = trimmed(fields[2]);
    if (!dots.empty()) {
      for (const std::string& d : split(dots, ','))
        s.dots.push_back(static_cast<int>(parse_int_token(trimmed(d), "dot position")));
    }
    out.push_back(std::move(s));
  }
  return out;
}

Regions parse_regions(const std::string& text) {
  if (trimmed(text).empty()) throw ParseError("empty region list");
  Regions out;
  for (const std::string& raw : split(text, '/')) {
    std::vector<int> region;
    for (const std::string& tok : split(raw, ',')) {
      long long v = parse_int_token(trimmed(tok), "stack index");
      if (v < 0 || v > 1000000) throw ParseError("stack index out of range: '" + raw + "'");
      region.push_back(static_cast<int>(v));
    }
    out.push_back(std::move(region));
  }
  return out;
}

}  // namespace sbn
}  // namespace bnskein
