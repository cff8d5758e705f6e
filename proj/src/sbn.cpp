#include "bnskein/sbn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "bnskein/errors.hpp"

namespace bnskein {
namespace sbn {

void validate_spec(const SurfaceSpec& spec) {
  if (spec.genus < 0) throw DomainError("surface genus must be >= 0");
  if (spec.genus > 15) throw DomainError("surface genus capped at 15 (class width 30)");
  if (spec.singular_points < 0) throw DomainError("singular point count must be >= 0");
}

void validate_stack(const Stack& s, int width) {
  if (s.weight < 1) throw DomainError("stack weight must be >= 1");
  if (s.trivial) {
    if (!s.cls.is_zero()) throw DomainError("a trivial stack must have class zero");
  } else if (s.cls.width != width) {
    throw DomainError("stack class width does not match the surface");
  }
  int prev = -1;
  for (int p : s.dots) {
    if (p < 0 || p >= s.weight) throw DomainError("dot position outside the stack");
    if (p <= prev) throw DomainError("dot positions must be strictly increasing");
    prev = p;
  }
}

namespace {

// Number of distinct circles a region sees on its boundary: min(w,2)
// for a loop (the two band sides are the same circle only at weight 1),
// one for each non-loop end.
int boundary_circles(const SkeinGraph& g, int v) {
  int n = 0;
  for (const SkeinEdge& e : g.edges) {
    if (e.is_loop()) {
      if (e.v0 == v) n += std::min(e.stack.weight, 2);
    } else {
      if (e.v0 == v) ++n;
      if (e.v1 == v) ++n;
    }
  }
  return n;
}

int distinct_edges_at(const SkeinGraph& g, int v) {
  int n = 0;
  for (const SkeinEdge& e : g.edges)
    if (e.v0 == v || e.v1 == v) ++n;
  return n;
}

// Indices of the non-loop edges with an end at v.  A divalent vertex in
// the reduction sense joins exactly two distinct non-loop edges and
// carries no loop.
std::vector<int> divalent_pair(const SkeinGraph& g, int v) {
  std::vector<int> ends;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const SkeinEdge& e = g.edges[i];
    if (e.is_loop()) {
      if (e.v0 == v) return {};
    } else if (e.v0 == v || e.v1 == v) {
      ends.push_back(static_cast<int>(i));
    }
  }
  if (ends.size() != 2 || ends[0] == ends[1]) return {};
  return ends;
}

// Endpoint/dot relabeling that flips which band side is side 0.
Stack reversed(Stack s) {
  std::vector<int> dots;
  for (auto it = s.dots.rbegin(); it != s.dots.rend(); ++it)
    dots.push_back(s.weight - 1 - *it);
  s.dots = std::move(dots);
  return s;
}

}  // namespace

long long SkeinGraph::total_weight() const {
  long long w = 0;
  for (const SkeinEdge& e : edges) w += e.stack.weight;
  return w;
}

int SkeinGraph::dot_count() const {
  int n = 0;
  for (const SkeinEdge& e : edges) n += static_cast<int>(e.stack.dots.size());
  return n;
}

bool DottedCanonical::operator==(const DottedCanonical& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Zero) return true;
  if (!(coeff == o.coeff) || n != o.n || e != o.e) return false;
  return kind == Kind::TypeA || f == o.f;
}

bool DottedCanonical::operator<(const DottedCanonical& o) const {
  auto key = [](const DottedCanonical& d) {
    return std::make_tuple(static_cast<int>(d.kind), d.e, d.f, d.n, d.coeff.num(),
                           d.coeff.den());
  };
  return key(*this) < key(o);
}

std::string DottedCanonical::to_string() const {
  if (kind == Kind::Zero || coeff.is_zero()) return "0";
  std::string out = coeff.is_negative() ? "-" : "+";
  ring::Rational mag = coeff.is_negative() ? -coeff : coeff;
  if (!mag.is_one()) out += mag.to_string() + "*";
  if (kind == Kind::TypeA) {
    out += "TypeA[e=" + e.to_string() + "]";
  } else {
    out += "TypeBC[e=" + e.to_string() + ",f=" + f.to_string() + "]";
  }
  out += "(n=" + std::to_string(n) + ")";
  return out;
}

SkeinGraph build_graph(const SurfaceSpec& spec, const std::vector<Stack>& stacks,
                       const Regions& regions) {
  validate_spec(spec);
  if (stacks.empty()) throw DomainError("a diagram needs at least one stack");
  for (const Stack& s : stacks) {
    validate_stack(s, spec.h1_width());
    if (s.trivial) throw DomainError("trivial circles are consumed before graphs are formed");
  }
  if (regions.empty()) throw DomainError("a diagram needs at least one region");

  // First and second region slot of each stack, in scan order.
  std::vector<std::pair<int, int>> sides(stacks.size(), {-1, -1});
  for (size_t r = 0; r < regions.size(); ++r) {
    if (regions[r].empty()) throw DomainError("every region must border at least one stack");
    for (int idx : regions[r]) {
      if (idx < 0 || idx >= static_cast<int>(stacks.size()))
        throw DomainError("region refers to a stack that does not exist");
      auto& slot = sides[static_cast<size_t>(idx)];
      if (slot.first < 0)
        slot.first = static_cast<int>(r);
      else if (slot.second < 0)
        slot.second = static_cast<int>(r);
      else
        throw DomainError("a stack is claimed by more than two region slots");
    }
  }

  SkeinGraph g;
  g.spec = spec;
  g.vertices = static_cast<int>(regions.size());
  for (size_t i = 0; i < stacks.size(); ++i) {
    if (sides[i].second < 0)
      throw DomainError("a stack is claimed by fewer than two region slots");
    g.edges.push_back(SkeinEdge{stacks[i], sides[i].first, sides[i].second});
  }
  return g;
}

bool check_admissible(const SkeinGraph& g) {
  int width = g.spec.h1_width();
  for (int v = 0; v < g.vertices; ++v) {
    H1Class acc(0, width);
    for (const SkeinEdge& e : g.edges) {
      if (e.is_loop()) continue;
      if (e.v0 == v || e.v1 == v) acc = acc + e.stack.cls;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool is_reduced(const SkeinGraph& g) {
  for (int v = 0; v < g.vertices; ++v)
    if (!divalent_pair(g, v).empty()) return false;
  return true;
}

SkeinGraph reduce_graph(const SkeinGraph& g) {
  if (!check_admissible(g)) throw DomainError("reduce_graph requires an admissible diagram");

  SkeinGraph cur = g;
  for (;;) {
    int at = -1;
    std::vector<int> pair;
    for (int v = 0; v < cur.vertices && at < 0; ++v) {
      pair = divalent_pair(cur, v);
      if (!pair.empty()) at = v;
    }
    if (at < 0) break;

    SkeinEdge a = cur.edges[static_cast<size_t>(pair[0])];
    SkeinEdge b = cur.edges[static_cast<size_t>(pair[1])];
    // Orient a into the vertex and b out of it, so the merged band reads
    // a then b.  Reversal relabels positions only; the dot stays put.
    if (a.v1 != at) {
      std::swap(a.v0, a.v1);
      a.stack = reversed(a.stack);
    }
    if (b.v0 != at) {
      std::swap(b.v0, b.v1);
      b.stack = reversed(b.stack);
    }
    if (a.stack.cls != b.stack.cls)
      throw DomainError("class mismatch at a divalent vertex: admissibility was violated");

    SkeinEdge merged;
    merged.stack.cls = a.stack.cls;
    merged.stack.weight = a.stack.weight + b.stack.weight;
    merged.stack.dots = a.stack.dots;
    for (int p : b.stack.dots) merged.stack.dots.push_back(p + a.stack.weight);
    merged.v0 = a.v0;
    merged.v1 = b.v1;

    SkeinGraph next;
    next.spec = cur.spec;
    next.vertices = cur.vertices - 1;
    for (size_t i = 0; i < cur.edges.size(); ++i) {
      if (static_cast<int>(i) == pair[0] || static_cast<int>(i) == pair[1]) continue;
      next.edges.push_back(cur.edges[i]);
    }
    next.edges.push_back(merged);
    for (SkeinEdge& e : next.edges) {
      if (e.v0 > at) --e.v0;
      if (e.v1 > at) --e.v1;
    }
    cur = std::move(next);
  }
  return cur;
}

bool is_zero_in_graded(const SkeinGraph& g, int n) {
  if (!is_reduced(g)) throw DomainError("graded zero test requires a reduced diagram");
  if (g.dot_count() != 1)
    throw DomainError("graded zero test requires exactly one dot (multi-dot states vanish upstream)");

  if (g.total_weight() <= n - 1) return true;
  for (int v = 0; v < g.vertices; ++v) {
    if (boundary_circles(g, v) > 2) return true;
    if (distinct_edges_at(g, v) > 2) return true;
  }
  for (const SkeinEdge& e : g.edges)
    if (e.is_loop() && e.stack.weight > 1 && e.stack.weight % 2 == 1) return true;
  return false;
}

DottedCanonical classify(const SkeinGraph& g, int n) {
  if (!check_admissible(g)) throw DomainError("classify requires an admissible diagram");
  if (g.total_weight() != n)
    throw DomainError("classify requires total weight equal to the graded level");
  if (is_zero_in_graded(g, n)) throw DomainError("classify called on a vanishing state");

  auto residue = [&]() -> ClassificationError {
    return ClassificationError(
        "diagram survives every zero condition but matches no canonical template");
  };

  ring::Rational sign(1);
  for (const SkeinEdge& e : g.edges)
    if (!e.stack.dots.empty() && e.stack.dots[0] % 2 == 1) sign = ring::Rational(-1);

  if (g.edges.size() == 1) {
    const SkeinEdge& e = g.edges[0];
    if (!e.is_loop() || g.vertices != 1) throw residue();
    DottedCanonical out;
    out.kind = DottedCanonical::Kind::TypeA;
    out.coeff = sign;
    out.e = e.stack.cls;
    out.f = H1Class(0, g.spec.h1_width());
    out.n = e.stack.weight;
    return out;
  }

  if (g.edges.size() == 2) {
    const SkeinEdge& a = g.edges[0];
    const SkeinEdge& b = g.edges[1];
    if (!a.is_loop() || !b.is_loop() || a.v0 != b.v0 || g.vertices != 1) throw residue();
    if (a.stack.weight != 1 || b.stack.weight != 1) throw residue();
    if (a.stack.cls == b.stack.cls) throw residue();
    const SkeinEdge& dotted = a.stack.dots.empty() ? b : a;
    const SkeinEdge& other = a.stack.dots.empty() ? a : b;
    DottedCanonical out;
    out.kind = DottedCanonical::Kind::TypeBC;
    out.coeff = sign;
    out.e = dotted.stack.cls;
    out.f = other.stack.cls;
    out.n = 0;
    return out;
  }

  if (g.edges.size() == 3) {
    const SkeinEdge* loops[2] = {nullptr, nullptr};
    const SkeinEdge* middle = nullptr;
    int nloops = 0;
    for (const SkeinEdge& e : g.edges) {
      if (e.is_loop()) {
        if (nloops < 2) loops[nloops] = &e;
        ++nloops;
      } else {
        middle = &e;
      }
    }
    if (nloops != 2 || middle == nullptr || g.vertices != 2) throw residue();
    if (loops[0]->v0 == loops[1]->v0) throw residue();
    if (loops[0]->stack.weight != 1 || loops[1]->stack.weight != 1) throw residue();
    bool spans = (middle->v0 == loops[0]->v0 && middle->v1 == loops[1]->v0) ||
                 (middle->v0 == loops[1]->v0 && middle->v1 == loops[0]->v0);
    if (!spans) throw residue();
    if (!middle->stack.cls.is_zero()) throw residue();
    if (loops[0]->stack.cls == loops[1]->stack.cls) throw residue();

    DottedCanonical out;
    out.kind = DottedCanonical::Kind::TypeBC;
    out.coeff = sign;
    out.n = middle->stack.weight;
    if (!loops[0]->stack.dots.empty() || !loops[1]->stack.dots.empty()) {
      const SkeinEdge* dotted = loops[0]->stack.dots.empty() ? loops[1] : loops[0];
      const SkeinEdge* other = loops[0]->stack.dots.empty() ? loops[0] : loops[1];
      out.e = dotted->stack.cls;
      out.f = other->stack.cls;
    } else {
      out.e = std::min(loops[0]->stack.cls, loops[1]->stack.cls);
      out.f = std::max(loops[0]->stack.cls, loops[1]->stack.cls);
    }
    return out;
  }

  throw residue();
}

long long graded_dimension(const SurfaceSpec& spec, int n, bool exclude_zero_class) {
  validate_spec(spec);
  if (n <= 0) throw DomainError("graded level must be >= 1");
  long long h = 1LL << spec.h1_width();
  long long loops = exclude_zero_class ? h - 1 : h;
  long long pairs = exclude_zero_class ? (h - 1) * (h - 2) : h * (h - 1);
  if (n == 1) return loops;
  if (n % 2 == 1) return pairs;
  return loops + pairs;
}

namespace {

using EdgeKey = std::tuple<int, int, uint32_t, int, std::vector<int>>;

EdgeKey oriented_key(const SkeinEdge& e) {
  SkeinEdge a = e;
  SkeinEdge b = e;
  std::swap(b.v0, b.v1);
  b.stack = reversed(b.stack);
  auto key = [](const SkeinEdge& x) {
    return EdgeKey{x.v0, x.v1, x.stack.cls.bits, x.stack.weight, x.stack.dots};
  };
  return std::min(key(a), key(b));
}

std::vector<EdgeKey> graph_key(const SkeinGraph& g, const std::vector<int>& perm) {
  std::vector<EdgeKey> keys;
  keys.reserve(g.edges.size());
  for (const SkeinEdge& e : g.edges) {
    SkeinEdge r = e;
    r.v0 = perm[static_cast<size_t>(e.v0)];
    r.v1 = perm[static_cast<size_t>(e.v1)];
    keys.push_back(oriented_key(r));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

SkeinGraph canonical_graph(const SkeinGraph& g) {
  if (g.vertices > 8) throw DomainError("canonical comparison is capped at 8 vertices");
  std::vector<int> perm(static_cast<size_t>(g.vertices));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_perm = perm;
  std::vector<EdgeKey> best = graph_key(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<EdgeKey> cand = graph_key(g, perm);
    if (cand < best) {
      best = cand;
      best_perm = perm;
    }
  }

  SkeinGraph out;
  out.spec = g.spec;
  out.vertices = g.vertices;
  for (const EdgeKey& k : best) {
    SkeinEdge e;
    e.v0 = std::get<0>(k);
    e.v1 = std::get<1>(k);
    e.stack.cls = H1Class(std::get<2>(k), g.spec.h1_width());
    e.stack.weight = std::get<3>(k);
    e.stack.dots = std::get<4>(k);
    out.edges.push_back(e);
  }
  (void)best_perm;
  return out;
}

bool same_graph(const SkeinGraph& a, const SkeinGraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  if (a.spec.genus != b.spec.genus) return false;
  SkeinGraph ca = canonical_graph(a);
  SkeinGraph cb = canonical_graph(b);
  if (ca.vertices != cb.vertices || ca.edges.size() != cb.edges.size()) return false;
  for (size_t i = 0; i < ca.edges.size(); ++i) {
    const SkeinEdge& x = ca.edges[i];
    const SkeinEdge& y = cb.edges[i];
    if (x.v0 != y.v0 || x.v1 != y.v1) return false;
    if (x.stack.cls != y.stack.cls || x.stack.weight != y.stack.weight ||
        x.stack.dots != y.stack.dots)
      return false;
  }
  return true;
}

}  // namespace sbn
}  // namespace bnskein
