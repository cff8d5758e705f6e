#include <set>
#include <string>
#include <tuple>

#include "bnskein/errors.hpp"
#include "bnskein/sbn.hpp"

namespace bnskein {
namespace sbn {

namespace {

std::string graph_key(const SkeinGraph& g) {
  SkeinGraph c = canonical_graph(g);
  std::string k = std::to_string(c.vertices);
  for (const SkeinEdge& e : c.edges) {
    k += ";" + std::to_string(e.v0) + "-" + std::to_string(e.v1) + ":" +
         std::to_string(e.stack.cls.bits) + ":" + std::to_string(e.stack.weight) + ":";
    for (int p : e.stack.dots) k += std::to_string(p) + ",";
  }
  return k;
}

struct Accumulator {
  int level = 0;
  bool exclude = false;
  std::set<std::string> seen;
  std::set<std::tuple<int, uint32_t, uint32_t, int>> values;
  long long residue = 0;

  void consider(const SkeinGraph& g) {
    if (!check_admissible(g)) return;
    if (is_zero_in_graded(g, level)) return;
    if (!seen.insert(graph_key(g)).second) return;
    try {
      DottedCanonical v = classify(g, level);
      if (exclude) {
        if (v.e.is_zero()) return;
        if (v.kind == DottedCanonical::Kind::TypeBC && v.f.is_zero()) return;
      }
      values.insert({static_cast<int>(v.kind), v.e.bits, v.f.bits, v.n});
    } catch (const ClassificationError&) {
      ++residue;
    }
  }
};

SkeinEdge edge(uint32_t bits, int width, int weight, int dot, int v0, int v1) {
  SkeinEdge e;
  e.stack.cls = H1Class(bits, width);
  e.stack.weight = weight;
  if (dot >= 0) e.stack.dots = {dot};
  e.v0 = v0;
  e.v1 = v1;
  return e;
}

}  // namespace

/*
 * Every reduced connected diagram in which each vertex meets at most
 * two distinct edges has pairwise endpoint-disjoint non-loop edges,
 * hence at most one of them; diagrams violating that bound vanish in
 * the graded piece and contribute nothing.  The five families below
 * are therefore the whole surviving universe: a loop, two loops at a
 * shared vertex, a bare edge, a loop with a tail, and two loops joined
 * by a middle edge.
 */
GradedEnumeration enumerate_graded(const SurfaceSpec& spec, int n, bool exclude_zero_class) {
  validate_spec(spec);
  if (n <= 0) throw DomainError("graded level must be >= 1");
  int width = spec.h1_width();
  uint32_t classes = 1u << width;

  Accumulator acc;
  acc.level = n;
  acc.exclude = exclude_zero_class;

  auto consider = [&](int vertices, std::initializer_list<SkeinEdge> edges) {
    SkeinGraph g;
    g.spec = spec;
    g.vertices = vertices;
    g.edges.assign(edges);
    acc.consider(g);
  };

  for (uint32_t e = 0; e < classes; ++e)
    for (int p = 0; p < n; ++p) consider(1, {edge(e, width, n, p, 0, 0)});

  for (int w1 = 1; w1 < n; ++w1) {
    int w2 = n - w1;
    for (uint32_t e = 0; e < classes; ++e)
      for (uint32_t f = 0; f < classes; ++f) {
        for (int p = 0; p < w1; ++p)
          consider(1, {edge(e, width, w1, p, 0, 0), edge(f, width, w2, -1, 0, 0)});
        for (int p = 0; p < w2; ++p)
          consider(1, {edge(e, width, w1, -1, 0, 0), edge(f, width, w2, p, 0, 0)});
      }
  }

  for (uint32_t c = 0; c < classes; ++c)
    for (int p = 0; p < n; ++p) consider(2, {edge(c, width, n, p, 0, 1)});

  for (int wl = 1; wl < n; ++wl) {
    int wt = n - wl;
    for (uint32_t e = 0; e < classes; ++e)
      for (uint32_t c = 0; c < classes; ++c) {
        for (int p = 0; p < wl; ++p)
          consider(2, {edge(e, width, wl, p, 0, 0), edge(c, width, wt, -1, 0, 1)});
        for (int p = 0; p < wt; ++p)
          consider(2, {edge(e, width, wl, -1, 0, 0), edge(c, width, wt, p, 0, 1)});
      }
  }

  for (int w1 = 1; w1 + 1 < n; ++w1)
    for (int w2 = 1; w1 + w2 < n; ++w2) {
      int m = n - w1 - w2;
      for (uint32_t e = 0; e < classes; ++e)
        for (uint32_t f = 0; f < classes; ++f)
          for (uint32_t c = 0; c < classes; ++c) {
            for (int p = 0; p < w1; ++p)
              consider(2, {edge(e, width, w1, p, 0, 0), edge(f, width, w2, -1, 1, 1),
                           edge(c, width, m, -1, 0, 1)});
            for (int p = 0; p < w2; ++p)
              consider(2, {edge(e, width, w1, -1, 0, 0), edge(f, width, w2, p, 1, 1),
                           edge(c, width, m, -1, 0, 1)});
            for (int p = 0; p < m; ++p)
              consider(2, {edge(e, width, w1, -1, 0, 0), edge(f, width, w2, -1, 1, 1),
                           edge(c, width, m, p, 0, 1)});
          }
    }

  GradedEnumeration out;
  out.classified = static_cast<long long>(acc.values.size());
  out.residue = acc.residue;
  return out;
}

}  // namespace sbn
}  // namespace bnskein
