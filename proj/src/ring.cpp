#include "bnskein/ring.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bnskein {
namespace ring {

namespace {

constexpr __int128 kMax = std::numeric_limits<long long>::max();
constexpr __int128 kMin = std::numeric_limits<long long>::min();

long long narrow(__int128 v, const char* ctx) {
  if (v > kMax || v < kMin) throw OverflowError(std::string("rational overflow in ") + ctx);
  return static_cast<long long>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) d = 1;
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "reduce");
  r.den_ = narrow(d, "reduce");
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_), "negate");
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return make(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return make(n, d);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  __int128 n = static_cast<__int128>(num_) * o.den_;
  __int128 d = static_cast<__int128>(den_) * o.num_;
  return make(n, d);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

Rational Rational::pow(int k) const {
  if (k < 0) {
    if (num_ == 0) throw DomainError("negative power of zero");
    return Rational(den_, num_).pow(-k);
  }
  Rational acc(1);
  Rational base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  size_t slash = text.find('/');
  auto parse_ll = [&](const std::string& s) -> long long {
    if (s.empty()) throw ParseError("malformed rational '" + text + "'");
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("malformed rational '" + text + "'");
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("malformed rational '" + text + "'");
    errno = 0;
    long long v = std::strtoll(s.c_str(), nullptr, 10);
    if (errno == ERANGE) throw OverflowError("rational literal out of range: " + text);
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_ll(text));
  long long n = parse_ll(text.substr(0, slash));
  long long d = parse_ll(text.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(n, d);
}

Rational halve(const Rational& a, CoeffRing ring, const char* who) {
  if (ring == CoeffRing::integers)
    throw DomainError(std::string(who) + " needs 1/2, not available over the integers");
  return a * Rational(1, 2);
}

LaurentElement::LaurentElement(const Rational& c) {
  if (!c.is_zero()) terms_[0] = c;
}

LaurentElement LaurentElement::monomial(const Rational& c, long long e2) {
  LaurentElement e;
  if (!c.is_zero()) e.terms_[e2] = c;
  return e;
}

void LaurentElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
  LaurentElement r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end())
      r.terms_[e] = c;
    else
      it->second += c;
  }
  r.prune();
  return r;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentElement LaurentElement::operator*(const LaurentElement& o) const {
  LaurentElement r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      long long e = e1 + e2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end())
        r.terms_[e] = c1 * c2;
      else
        it->second += c1 * c2;
    }
  r.prune();
  return r;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e2, c] = *it;
    if (!first) out << " + ";
    first = false;
    if (e2 == 0) {
      out << c.to_string();
    } else {
      if (!c.is_one()) out << c.to_string() << "*";
      out << "x^{";
      if (e2 % 2 == 0)
        out << (e2 / 2);
      else
        out << e2 << "/2";
      out << "}";
    }
  }
  return out.str();
}

LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b) { return a * b; }

}  // namespace ring
}  // namespace bnskein
