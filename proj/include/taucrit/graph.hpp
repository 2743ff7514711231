#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taucrit {

/// Set of vertices of a graph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

/// The set {0, ..., n-1}.
constexpr VertexSet first_vertices(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : vertex_bit(n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  for (; s != 0; s &= s - 1) f(std::countr_zero(s));
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 vertices.
///
/// Rows are neighbour bitmasks. Rows at index >= order() are always zero so
/// that the defaulted equality is structural.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
  }

  int order() const { return n_; }
  VertexSet vertices() const { return first_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const { return set_size(adj_[check(v)]); }
  bool has_edge(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }

  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += set_size(adj_[v]);
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
  }

  void remove_edge(int u, int v) {
    check(u);
    check(v);
    adj_[u] &= ~vertex_bit(v);
    adj_[v] &= ~vertex_bit(u);
  }

  Graph without_edge(const Edge& e) const {
    Graph h = *this;
    h.remove_edge(e.u, e.v);
    return h;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for_each_vertex(adj_[u] & ~first_vertices(u + 1), [&](int v) { out.push_back({u, v}); });
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    return v;
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// ---------------------------------------------------------------------------
// Standard constructors

inline Graph complete(int k) {
  if (k < 1) throw GraphError("complete graph needs k >= 1");
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int k) {
  if (k < 3) throw GraphError("cycle needs k >= 3");
  Graph g(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

inline Graph path(int k) {
  if (k < 1) throw GraphError("path needs k >= 1");
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

/// t disjoint copies of K2.
inline Graph matching(int t) {
  if (t < 0 || 2 * t > kMaxVertices) throw GraphError("matching size out of range");
  Graph g(2 * t);
  for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

/// Vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.order();
  if (offset + b.order() > kMaxVertices) throw GraphError("disjoint union exceeds 64 vertices");
  Graph g(offset + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + offset, e.v + offset);
  return g;
}

/// Induced subgraph on `subset`, relabelled in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, VertexSet subset) {
  subset &= g.vertices();
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for_each_vertex(subset, [&](int v) { index[v] = k++; });
  Graph h(k);
  for_each_vertex(subset, [&](int u) {
    for_each_vertex(g.neighbors(u) & subset & ~first_vertices(u + 1),
                    [&](int v) { h.add_edge(index[u], index[v]); });
  });
  return h;
}

/// Vertex v of g becomes vertex perm[v] of the result.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

// ---------------------------------------------------------------------------
// Structural queries

struct Component {
  VertexSet vertices = 0;
  Graph graph;
};

/// Maximal connected parts, ordered by smallest vertex.
struct ComponentSplit {
  std::vector<Component> parts;
};

inline VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = vertex_bit(v);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

inline ComponentSplit components(const Graph& g) {
  ComponentSplit split;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet part = component_of(g, std::countr_zero(left));
    split.parts.push_back({part, induced_subgraph(g, part)});
    left &= ~part;
  }
  return split;
}

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
  int edges = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  int sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    p.degrees.push_back(d);
    p.max_degree = std::max(p.max_degree, d);
    sum += d;
  }
  p.edges = sum / 2;
  return p;
}

inline int max_degree(const Graph& g) { return degree_profile(g).max_degree; }

inline bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

/// First component (by smallest vertex) in which every vertex has degree d.
inline std::optional<VertexSet> has_regular_component(const Graph& g, int d) {
  if (d < 0) return std::nullopt;
  for (const Component& c : components(g).parts) {
    bool all = true;
    for_each_vertex(c.vertices, [&](int v) { all = all && g.degree(v) == d; });
    if (all) return c.vertices;
  }
  return std::nullopt;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace taucrit
