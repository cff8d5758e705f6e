#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bnskein/errors.hpp"

namespace bnskein {
namespace ring {

// Which coefficient ring a computation runs over.  The default is the
// rationals.  Integer mode is accepted everywhere but any operation that
// has to divide by 2 refuses to run there.
enum class CoeffRing { rationals, integers };

/*
 * Exact rational arithmetic on 64-bit numerator / denominator.
 *
 * Invariants: den > 0, gcd(|num|, den) = 1, zero is 0/1.  Intermediate
 * products are taken in 128 bits; a value that does not fit back into
 * 64 bits after reduction throws OverflowError instead of wrapping.
 * All quantities in this project are desk scale, so the guard is a
 * tripwire, not a limitation that is ever expected to fire.
 */
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws DomainError on /0

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  // k may be negative for nonzero values.
  Rational pow(int k) const;

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const;

private:
  long long num_, den_;
  static Rational make(__int128 n, __int128 d);
};

inline Rational coeff_add(const Rational& a, const Rational& b) { return a + b; }

// Divides by 2, the one inverse the rewrite rules ever need.  In integer
// mode this is a domain error; the caller reports which rule needed it.
Rational halve(const Rational& a, CoeffRing ring, const char* who);

/*
 * Finite sum  sum_e c_e * x^{e/2}  with exact rational coefficients and
 * half-integer exponents.  Exponents are stored doubled, so x^{3/2} lives
 * at key 3 and x^2 at key 4; no term has a zero coefficient.
 */
class LaurentElement {
public:
  LaurentElement() = default;
  explicit LaurentElement(const Rational& c);  // constant term

  // Monomial c * x^{e2/2}.
  static LaurentElement monomial(const Rational& c, long long e2);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Rational>& terms() const { return terms_; }

  LaurentElement operator+(const LaurentElement& o) const;
  LaurentElement operator-() const;
  LaurentElement operator-(const LaurentElement& o) const { return *this + (-o); }
  LaurentElement operator*(const LaurentElement& o) const;

  bool operator==(const LaurentElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentElement& o) const { return !(*this == o); }

  // Terms joined by " + ", highest exponent first: "3/2*x^{1/2} + 1".
  // Integral exponents print as plain integers, halves as "n/2".
  std::string to_string() const;

private:
  std::map<long long, Rational> terms_;  // doubled exponent -> coefficient
  void prune();
};

LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b);

}  // namespace ring
}  // namespace bnskein
