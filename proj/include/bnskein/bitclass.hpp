#pragma once

#include <cstdint>
#include <string>

#include "bnskein/errors.hpp"

namespace bnskein {

/*
 * An element of a Z_2 vector space of fixed small dimension, stored as a
 * bit-vector.  Bit i is basis vector i; rendering and parsing use the
 * string form "b0b1...", e.g. "101" for e_0 + e_2 in dimension 3.
 */
struct BitClass {
  uint32_t bits = 0;
  int width = 0;

  BitClass() = default;
  BitClass(uint32_t b, int w) : bits(b), width(w) {
    if (w < 0 || w > 30) throw DomainError("bit class width out of range");
    if (w < 30 && (b >> w) != 0) throw DomainError("bit class has bits beyond its width");
  }

  bool is_zero() const { return bits == 0; }

  BitClass operator+(const BitClass& o) const {
    if (width != o.width) throw DomainError("bit class width mismatch");
    return BitClass(bits ^ o.bits, width);
  }

  bool operator==(const BitClass& o) const { return bits == o.bits && width == o.width; }
  bool operator!=(const BitClass& o) const { return !(*this == o); }
  bool operator<(const BitClass& o) const {
    return width != o.width ? width < o.width : bits < o.bits;
  }

  std::string to_string() const {
    std::string s(static_cast<size_t>(width), '0');
    for (int i = 0; i < width; ++i)
      if ((bits >> i) & 1u) s[static_cast<size_t>(i)] = '1';
    return s;
  }

  static BitClass parse(const std::string& text) {
    if (text.size() > 30) throw ParseError("bit class too wide: '" + text + "'");
    uint32_t b = 0;
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        b |= 1u << i;
      else if (text[i] != '0')
        throw ParseError("bit class must be 0/1 digits: '" + text + "'");
    }
    return BitClass(b, static_cast<int>(text.size()));
  }
};

}  // namespace bnskein
