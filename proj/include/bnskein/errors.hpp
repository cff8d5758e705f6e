#pragma once

#include <stdexcept>
#include <string>

namespace bnskein {

// Precondition or domain violations. CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input. CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact arithmetic left the supported 64-bit range.
class OverflowError : public std::runtime_error {
public:
  explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// A graph survived every zero condition but matches no known canonical
// template. Surfaced loudly instead of guessing.
class ClassificationError : public std::runtime_error {
public:
  explicit ClassificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bnskein
