#pragma once

#include <functional>
#include <map>
#include <vector>

#include "bnskein/bitclass.hpp"
#include "bnskein/ring.hpp"

namespace bnskein {
namespace mbn {

using H2Class = BitClass;

// Candidate constants (x, y, z) for the renormalized skein relations:
// dotted sphere = x, white sphere = y, double-dot = z * single-dot.
struct NormalizationConstants {
  ring::Rational x, y, z;
};

// True iff the two sphere-evaluation identities y = 2yz and z = z^2 + xy
// hold, which is exactly the consistency condition on (x, y, z).
bool check_normalization(const NormalizationConstants& c);

/*
 * The complete solution set, as three one-parameter families in x:
 * {y != 0: z = 1/2, xy = 1/4}, {y = 0, z = 1} (the unnormalized theory),
 * and {y = 0, z = 0} (everything collapses).  Each family carries a
 * sampler producing a concrete solution for a given x.
 */
struct NormalizationFamily {
  std::string name;
  std::function<NormalizationConstants(const ring::Rational& x)> sample;
  std::function<bool(const NormalizationConstants&)> contains;
};

std::vector<NormalizationFamily> enumerate_normalization_families();

// Membership in any family; on any finite grid this coincides with
// check_normalization.
bool in_some_family(const NormalizationConstants& c);

// alpha_k = (2x)^k, cross-checked against the defining recursion
// alpha_k = x * alpha_{k-1} + (1/2) * alpha_k.
ring::Rational dotted_state_recursion_check(const ring::Rational& x, int k);

/*
 * A marked surface for the doubly-modified theory: per component its
 * Euler characteristic (<= 2), dot count, Z_2 homology class, and
 * orientability.  Odd characteristics (non-orientable, RP^2-like) force
 * half-integer exponents and are gated behind allow_half.
 */
struct MbnSurface {
  struct Component {
    int euler_char = 2;
    int dots = 0;
    H2Class cls;
    bool orientable = true;
  };
  int width = 0;  // dim H_2(M; Z_2)
  std::vector<Component> components;
};

/*
 * An element of the free R[x^±]-module on H_2(M; Z_2), multiplied as the
 * group algebra: classes add mod 2, coefficients convolve.
 */
class MbnElement {
public:
  MbnElement() = default;

  static MbnElement unit(int width);  // 1 * [0...0]
  static MbnElement monomial(const H2Class& cls, const ring::LaurentElement& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<H2Class, ring::LaurentElement>& terms() const { return terms_; }

  void add(const H2Class& cls, const ring::LaurentElement& coeff);
  MbnElement operator+(const MbnElement& o) const;

  bool operator==(const MbnElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const MbnElement& o) const { return !(*this == o); }

  // "x^{e} * [bits]" terms joined by " + ", multi-term Laurent factors
  // parenthesized; the zero element prints "0".
  std::string to_string() const;

private:
  std::map<H2Class, ring::LaurentElement> terms_;
};

// x^{ sum_i(-chi_i/2) + total dots } * [sum of component classes].
// For orientable components the exponent sum is g(F) - |F|.
MbnElement mbn_evaluate(const MbnSurface& s, bool allow_half = false);

MbnElement mbn_multiply(const MbnElement& a, const MbnElement& b);

}  // namespace mbn
}  // namespace bnskein
