#include "bnskein/mbn.hpp"

#include <sstream>

namespace bnskein {
namespace mbn {

using ring::LaurentElement;
using ring::Rational;

bool check_normalization(const NormalizationConstants& c) {
  bool first = c.y == Rational(2) * c.y * c.z;
  bool second = c.z == c.z * c.z + c.x * c.y;
  return first && second;
}

std::vector<NormalizationFamily> enumerate_normalization_families() {
  std::vector<NormalizationFamily> out;
  out.push_back({
      "z=1/2, xy=1/4",
      [](const Rational& x) {
        if (x.is_zero()) throw DomainError("this family needs invertible x");
        return NormalizationConstants{x, Rational(1, 4) / x, Rational(1, 2)};
      },
      [](const NormalizationConstants& c) {
        return !c.y.is_zero() && c.z == Rational(1, 2) && c.x * c.y == Rational(1, 4);
      },
  });
  out.push_back({
      "y=0, z=1",
      [](const Rational& x) { return NormalizationConstants{x, Rational(0), Rational(1)}; },
      [](const NormalizationConstants& c) { return c.y.is_zero() && c.z == Rational(1); },
  });
  out.push_back({
      "y=0, z=0",
      [](const Rational& x) { return NormalizationConstants{x, Rational(0), Rational(0)}; },
      [](const NormalizationConstants& c) { return c.y.is_zero() && c.z.is_zero(); },
  });
  return out;
}

bool in_some_family(const NormalizationConstants& c) {
  for (const auto& fam : enumerate_normalization_families())
    if (fam.contains(c)) return true;
  return false;
}

Rational dotted_state_recursion_check(const Rational& x, int k) {
  if (k < 0) throw DomainError("negative dot count");
  Rational closed = (Rational(2) * x).pow(k);
  Rational iterated(1);
  for (int i = 1; i <= k; ++i) {
    // alpha_i = x*alpha_{i-1} + (1/2)*alpha_i  =>  alpha_i = 2x*alpha_{i-1}
    Rational alpha = Rational(2) * x * iterated;
    if (alpha != x * iterated + Rational(1, 2) * alpha)
      throw DomainError("dotted state recursion is inconsistent");
    iterated = alpha;
  }
  if (closed != iterated) throw DomainError("closed form disagrees with the recursion");
  return closed;
}

MbnElement MbnElement::unit(int width) {
  return monomial(H2Class(0, width), LaurentElement(Rational(1)));
}

MbnElement MbnElement::monomial(const H2Class& cls, const LaurentElement& coeff) {
  MbnElement e;
  e.add(cls, coeff);
  return e;
}

void MbnElement::add(const H2Class& cls, const LaurentElement& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(cls);
  if (it == terms_.end()) {
    terms_.emplace(cls, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

MbnElement MbnElement::operator+(const MbnElement& o) const {
  MbnElement r = *this;
  for (const auto& [cls, coeff] : o.terms_) r.add(cls, coeff);
  return r;
}

std::string MbnElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [cls, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool wrap = coeff.terms().size() > 1;
    if (wrap) out << "(";
    out << coeff.to_string();
    if (wrap) out << ")";
    out << " * [" << cls.to_string() << "]";
  }
  return out.str();
}

MbnElement mbn_evaluate(const MbnSurface& s, bool allow_half) {
  long long doubled_exponent = 0;
  H2Class total(0, s.width);
  for (const auto& c : s.components) {
    if (c.euler_char > 2) throw DomainError("no closed surface has Euler characteristic > 2");
    if (c.dots < 0) throw DomainError("negative dot count");
    if (c.orientable && c.euler_char % 2 != 0)
      throw DomainError("orientable component with odd Euler characteristic");
    if (!allow_half && ((c.euler_char % 2) + 2) % 2 == 1)
      throw DomainError("odd Euler characteristic needs half-integer exponents (allow_half)");
    if (c.cls.width != s.width) throw DomainError("homology class width mismatch");
    doubled_exponent += -c.euler_char + 2LL * c.dots;
    total = total + c.cls;
  }
  return MbnElement::monomial(total, LaurentElement::monomial(Rational(1), doubled_exponent));
}

MbnElement mbn_multiply(const MbnElement& a, const MbnElement& b) {
  MbnElement r;
  for (const auto& [c1, l1] : a.terms())
    for (const auto& [c2, l2] : b.terms()) r.add(c1 + c2, l1 * l2);
  return r;
}

}  // namespace mbn
}  // namespace bnskein
