#include "bnskein/state.hpp"

#include <algorithm>
#include <sstream>

namespace bnskein {
namespace core {

ComponentMultiset normalized(ComponentMultiset comps) {
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::string config_to_string(const ComponentMultiset& comps) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) out << ", ";
    out << comps[i].label << ":" << comps[i].genus << ":" << comps[i].dots;
  }
  out << "]";
  return out.str();
}

State State::term(const ComponentMultiset& comps, const ring::Rational& c) {
  State s;
  s.add(comps, c);
  return s;
}

void State::add(const ComponentMultiset& comps, const ring::Rational& c) {
  if (c.is_zero()) return;
  ComponentMultiset key = normalized(comps);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

State State::operator+(const State& o) const {
  State r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

State State::operator-() const {
  State r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

State State::scaled(const ring::Rational& c) const {
  State r;
  for (const auto& [k, v] : terms_) r.add(k, v * c);
  return r;
}

std::string State::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << "\n";
    first = false;
    out << c.to_string() << " * " << config_to_string(k);
  }
  return out.str();
}

namespace {

void strip(std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const std::string& line) {
  if (s.empty()) throw ParseError("missing integer in '" + line + "'");
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError("missing integer in '" + line + "'");
  for (; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad integer '" + s + "' in '" + line + "'");
  return std::stoi(s);
}

SurfaceComponent parse_component(std::string text, const std::string& line) {
  strip(text);
  size_t c1 = text.find(':');
  size_t c2 = (c1 == std::string::npos) ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ParseError("component needs label:genus:dots in '" + line + "'");
  SurfaceComponent comp;
  comp.label = text.substr(0, c1);
  strip(comp.label);
  if (comp.label.empty()) throw ParseError("empty component label in '" + line + "'");
  std::string g = text.substr(c1 + 1, c2 - c1 - 1);
  std::string d = text.substr(c2 + 1);
  strip(g);
  strip(d);
  comp.genus = parse_int(g, line);
  comp.dots = parse_int(d, line);
  if (comp.genus < 0 || comp.dots < 0)
    throw ParseError("negative genus or dots in '" + line + "'");
  return comp;
}

}  // namespace

State State::parse(const std::string& text) {
  State result;
  std::istringstream in(text);
  std::string line;
  bool saw_any = false;
  bool saw_zero = false;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    // '#' inside a component list is part of a label, not a comment.
    if (hash != std::string::npos && line.find('[') == std::string::npos)
      line = line.substr(0, hash);
    strip(line);
    if (line.empty()) continue;
    if (line == "0") {
      saw_zero = true;
      saw_any = true;
      continue;
    }
    saw_any = true;
    size_t star = line.find('*');
    size_t open = line.find('[');
    size_t close = line.rfind(']');
    if (star == std::string::npos || open == std::string::npos || close == std::string::npos ||
        star > open || close < open)
      throw ParseError("expected 'COEFF * [components]' in '" + line + "'");
    std::string coeff_text = line.substr(0, star);
    strip(coeff_text);
    ring::Rational coeff = ring::Rational::parse(coeff_text);
    std::string body = line.substr(open + 1, close - open - 1);
    strip(body);
    ComponentMultiset comps;
    if (!body.empty()) {
      size_t pos = 0;
      while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string piece =
            (comma == std::string::npos) ? body.substr(pos) : body.substr(pos, comma - pos);
        comps.push_back(parse_component(piece, line));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    result.add(comps, coeff);
  }
  if (!saw_any) throw ParseError("no state found in input");
  if (saw_zero && !result.is_zero())
    throw ParseError("'0' line mixed with nonzero terms");
  return result;
}

}  // namespace core
}  // namespace bnskein
