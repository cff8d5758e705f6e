#include "bnskein/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>
#include <sstream>

#include "bnskein/bitclass.hpp"
#include "bnskein/errors.hpp"
#include "bnskein/state.hpp"

namespace bnskein {
namespace seifert {

using core::ComponentMultiset;
using core::SurfaceComponent;
using ring::Rational;

void validate_data(const SeifertData& m) {
  if (m.base_genus < 0) throw DomainError("negative base genus");
  if (!m.total_space_orientable) throw DomainError("nonorientable total space is out of scope");
  if (!m.base_orientable) throw DomainError("nonorientable base surface is out of scope");
  for (const auto& [p, q] : m.singular_fibers) {
    (void)q;
    if (p == -1 || p == 0 || p == 1)
      throw DomainError("singular fiber multiplicity " + std::to_string(p) +
                        " is not allowed; |p| must exceed 1");
  }
}

void validate_class(const HorizontalClass& f) {
  if (f.token.empty()) throw DomainError("horizontal class token must be nonempty");
  for (char c : f.token) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      throw DomainError("horizontal class token '" + f.token +
                        "' contains a character outside [A-Za-z0-9_-]");
  }
  if (f.degree <= 0)
    throw DomainError("horizontal class '" + f.token + "' needs positive degree");
  if (f.genus < 0)
    throw DomainError("horizontal class '" + f.token + "' has negative genus");
}

bool HorizontalCanonical::operator==(const HorizontalCanonical& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Zero) return true;
  if (coeff != o.coeff || token != o.token) return false;
  return kind != Kind::Copies || copies == o.copies;
}

std::string HorizontalCanonical::to_string() const {
  if (kind == Kind::Zero || coeff.is_zero()) return "0";
  std::ostringstream out;
  out << coeff.to_string() << " * ";
  if (kind == Kind::Dotted) {
    out << "d_" << token;
  } else if (copies == 0) {
    out << "empty";
  } else {
    out << token << "^" << copies;
  }
  return out.str();
}

HorizontalCanonical normalize_horizontal(const HorizontalState& s) {
  validate_class(s.cls);
  if (s.copies < 0) throw DomainError("negative copy count");

  std::vector<int> counts(static_cast<size_t>(s.copies), 0);
  for (int pos : s.dots) {
    if (pos < 1 || pos > s.copies)
      throw DomainError("dot position " + std::to_string(pos) + " outside 1.." +
                        std::to_string(s.copies));
    counts[static_cast<size_t>(pos) - 1] += 1;
  }
  std::vector<int> dotted;
  for (int i = 0; i < s.copies; ++i) {
    if (counts[static_cast<size_t>(i)] >= 2) return HorizontalCanonical::zero();
    if (counts[static_cast<size_t>(i)] == 1) dotted.push_back(i + 1);
  }

  int d = static_cast<int>(dotted.size());
  HorizontalCanonical out;
  out.token = s.cls.token;
  out.coeff = Rational(1);

  if (d == 0) {
    out.kind = HorizontalCanonical::Kind::Copies;
    out.copies = s.copies;
    if (out.copies == 0) out.token.clear();
    return out;
  }
  if (s.cls.genus >= 1) {
    if (d == 1 && s.copies == 1) {
      out.kind = HorizontalCanonical::Kind::Dotted;
      return out;
    }
    return HorizontalCanonical::zero();
  }
  if (d % 2 == 0) {
    int shifts = 0;
    for (int i = 0; i + 1 < d; i += 2)
      shifts += dotted[static_cast<size_t>(i) + 1] - dotted[static_cast<size_t>(i)] - 1;
    out.kind = HorizontalCanonical::Kind::Copies;
    out.copies = s.copies - d;
    out.coeff = Rational(shifts % 2 == 0 ? 1 : -1);
    if (out.copies == 0) out.token.clear();
    return out;
  }
  if (s.copies > d) return HorizontalCanonical::zero();
  out.kind = HorizontalCanonical::Kind::Dotted;
  return out;
}

BnStructureReport bn_decompose(const SeifertData& m, std::vector<HorizontalClass> horiz) {
  validate_data(m);
  for (const auto& f : horiz) validate_class(f);

  std::sort(horiz.begin(), horiz.end(), [](const HorizontalClass& a, const HorizontalClass& b) {
    return std::tie(a.token, a.degree, a.genus) < std::tie(b.token, b.degree, b.genus);
  });
  for (size_t i = 0; i + 1 < horiz.size(); ++i) {
    if (horiz[i].token == horiz[i + 1].token)
      throw DomainError("horizontal class token '" + horiz[i].token + "' listed twice");
  }

  BnStructureReport report;
  report.data = m;
  std::sort(report.data.singular_fibers.begin(), report.data.singular_fibers.end());
  report.vertical =
      sbn::SurfaceSpec{m.base_genus, static_cast<int>(m.singular_fibers.size())};
  for (const auto& f : horiz) {
    report.horizontal.push_back(
        {f, "free on {" + f.token + "^k : k >= 0} plus one generator d_" + f.token});
  }
  return report;
}

std::string BnStructureReport::to_string() const {
  std::ostringstream out;
  out << "Seifert fibered space: base genus " << data.base_genus << ", "
      << data.singular_fibers.size() << " singular fiber"
      << (data.singular_fibers.size() == 1 ? "" : "s") << "\n";
  if (!data.singular_fibers.empty()) {
    out << "  fibers (p,q):";
    for (const auto& [p, q] : data.singular_fibers) out << " (" << p << "," << q << ")";
    out << "\n";
  }
  out << "vertical summand: surface skein module at genus " << vertical.genus << " with "
      << vertical.singular_points << " marked point"
      << (vertical.singular_points == 1 ? "" : "s") << "\n";
  out << "  graded dimensions n=1..4:";
  for (int n = 1; n <= 4; ++n) out << " " << sbn::graded_dimension(vertical, n);
  out << "\n";
  out << "horizontal summands: " << horizontal.size() << "\n";
  for (const auto& [cls, description] : horizontal) {
    out << "  " << cls.token << ": degree " << cls.degree << ", genus " << cls.genus << ", "
        << description << "\n";
  }
  return out.str();
}

namespace {

constexpr const char* kLiftPrefix = "vl#";

SurfaceComponent lift_torus(int pos, int dots) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s%02d", kLiftPrefix, pos);
  return SurfaceComponent{buf, 1, dots};
}

SurfaceComponent dotted_ball_sphere() { return SurfaceComponent{"ball-sphere", 0, 1}; }
SurfaceComponent white_ball_torus() { return SurfaceComponent{"ball-torus", 1, 0}; }

// The reference lift: n parallel copies of one curve class with the dot
// sitting on copy ref_pos.
struct LiftReference {
  int n = 1;
  int ref_pos = 0;
};

/*
 * Value of the detecting functional on a concrete state: nonzero only
 * when the state is the reference family (each copy present exactly
 * once, exactly one dot among them) plus singly dotted spheres in
 * balls and white tori in balls.  Each white torus halves the value;
 * each shift between the found dot and the reference flips the sign.
 */
Rational phi(const LiftReference& ref, const ComponentMultiset& comps) {
  int white_tori = 0;
  int dot_pos = -1;
  int dots_on_lift = 0;
  std::vector<bool> seen(static_cast<size_t>(ref.n), false);
  for (const auto& c : comps) {
    if (c.label.rfind(kLiftPrefix, 0) == 0) {
      int pos = 0;
      try {
        pos = std::stoi(c.label.substr(3));
      } catch (const std::exception&) {
        return Rational(0);
      }
      if (c.genus != 1 || pos < 0 || pos >= ref.n) return Rational(0);
      if (seen[static_cast<size_t>(pos)]) return Rational(0);
      seen[static_cast<size_t>(pos)] = true;
      if (c.dots >= 2) return Rational(0);
      if (c.dots == 1) {
        dots_on_lift += 1;
        dot_pos = pos;
      }
    } else if (c.genus == 0 && c.dots == 1) {
      continue;
    } else if (c.genus == 1 && c.dots == 0) {
      white_tori += 1;
    } else {
      return Rational(0);
    }
  }
  for (bool b : seen)
    if (!b) return Rational(0);
  if (dots_on_lift != 1) return Rational(0);
  int shifts = dot_pos > ref.ref_pos ? dot_pos - ref.ref_pos : ref.ref_pos - dot_pos;
  Rational value(shifts % 2 == 0 ? 1 : -1);
  return value * Rational(1, 2).pow(white_tori);
}

}  // namespace

LiftCheckReport vertical_lift_consistency(const sbn::SurfaceSpec& spec, int samples,
                                          unsigned seed) {
  sbn::validate_spec(spec);
  if (samples < 0) throw DomainError("negative sample count");

  std::mt19937 rng(seed);
  auto draw = [&rng](int bound) { return static_cast<int>(rng() % static_cast<unsigned>(bound)); };

  LiftCheckReport report;
  int width = spec.h1_width();
  for (int i = 0; i < samples; ++i) {
    int n = 2 + draw(4);
    LiftReference ref{n, draw(n)};
    int gap = draw(n - 1);
    int spheres = draw(3);
    int tori = draw(3);
    uint32_t bits = width == 0 ? 0 : (rng() & ((1u << width) - 1));
    int branch = draw(3);

    ComponentMultiset extras;
    for (int s = 0; s < spheres; ++s) extras.push_back(dotted_ball_sphere());
    for (int t = 0; t < tori; ++t) extras.push_back(white_ball_torus());
    if (branch == 1) extras.push_back(SurfaceComponent{"stray-surface", 2, 0});
    if (branch == 2) extras.push_back(SurfaceComponent{"ball-sphere", 0, 0});

    ComponentMultiset plus = extras;
    ComponentMultiset minus = extras;
    ComponentMultiset merged = extras;
    for (int pos = 0; pos < n; ++pos) {
      plus.push_back(lift_torus(pos, pos == gap ? 1 : 0));
      minus.push_back(lift_torus(pos, pos == gap + 1 ? 1 : 0));
      if (pos != gap + 1) merged.push_back(lift_torus(pos, pos == gap ? 1 : 0));
    }

    Rational lhs = phi(ref, merged);
    Rational rhs = phi(ref, plus) + phi(ref, minus);
    report.samples += 1;
    if (lhs != rhs) {
      report.violations += 1;
      std::ostringstream site;
      site << "sample " << i << ": n=" << n << " ref=" << ref.ref_pos << " gap=" << gap
           << " spheres=" << spheres << " tori=" << tori << " branch=" << branch;
      if (width > 0) site << " class=" << BitClass(bits, width).to_string();
      site << " lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
      report.violation_sites.push_back(site.str());
    }
  }
  return report;
}

}  // namespace seifert
}  // namespace bnskein
