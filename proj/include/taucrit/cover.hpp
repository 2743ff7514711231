#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "taucrit/graph.hpp"

namespace taucrit {

struct CoverResult {
  int size = 0;
  VertexSet witness = 0;
};

namespace detail {

// Branch and bound for vertex cover on bitmask graphs.
//
// Reductions: degree-0 vertices are dropped, and for a degree-1 vertex its
// neighbour is taken. Branching is on a maximum-degree vertex v: either v is
// in the cover, or all of N(v) is. A greedy maximal matching bounds from below.
class CoverSearch {
 public:
  // Looks for covers of size < `exclusive_bound`; stops as soon as one of size
  // <= `stop_at` is recorded.
  CoverSearch(const Graph& g, int exclusive_bound, int stop_at)
      : g_(g), best_size_(exclusive_bound), stop_at_(stop_at) {}

  void run() { search(g_.vertices(), 0, 0); }

  bool found() const { return found_; }
  int best_size() const { return best_size_; }
  VertexSet best_cover() const { return best_cover_; }

 private:
  int live_degree(int v, VertexSet alive) const { return set_size(g_.neighbors(v) & alive); }

  int matching_lower_bound(VertexSet alive) const {
    int count = 0;
    while (alive != 0) {
      const int u = std::countr_zero(alive);
      alive &= ~vertex_bit(u);
      const VertexSet nb = g_.neighbors(u) & alive;
      if (nb != 0) {
        alive &= ~vertex_bit(std::countr_zero(nb));
        ++count;
      }
    }
    return count;
  }

  void search(VertexSet alive, VertexSet chosen, int size) {
    if (done_) return;

    for (bool changed = true; changed;) {
      changed = false;
      for (VertexSet s = alive; s != 0; s &= s - 1) {
        const int v = std::countr_zero(s);
        if (!(alive & vertex_bit(v))) continue;
        const VertexSet nb = g_.neighbors(v) & alive;
        if (nb == 0) {
          alive &= ~vertex_bit(v);
          changed = true;
        } else if ((nb & (nb - 1)) == 0) {
          chosen |= nb;
          ++size;
          alive &= ~(nb | vertex_bit(v));
          changed = true;
        }
      }
      if (size >= best_size_) return;
    }

    if (alive == 0) {
      best_size_ = size;
      best_cover_ = chosen;
      found_ = true;
      done_ = size <= stop_at_;
      return;
    }

    if (size + matching_lower_bound(alive) >= best_size_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for_each_vertex(alive, [&](int v) {
      const int d = live_degree(v, alive);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });

    const VertexSet nb = g_.neighbors(pivot) & alive;
    search(alive & ~vertex_bit(pivot), chosen | vertex_bit(pivot), size + 1);
    search(alive & ~vertex_bit(pivot) & ~nb, chosen | nb, size + pivot_degree);
  }

  const Graph& g_;
  int best_size_;
  int stop_at_;
  VertexSet best_cover_ = 0;
  bool found_ = false;
  bool done_ = false;
};

}  // namespace detail

inline bool is_vertex_cover(const Graph& g, VertexSet cover) {
  for (int v = 0; v < g.order(); ++v)
    if (!(cover & vertex_bit(v)) && (g.neighbors(v) & ~cover) != 0) return false;
  return true;
}

inline bool is_independent_set(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

/// Exact minimum vertex cover (transversal number) with a witness.
inline CoverResult min_vertex_cover(const Graph& g) {
  VertexSet trivial = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) != 0) trivial |= vertex_bit(v);

  detail::CoverSearch search(g, set_size(trivial), -1);
  search.run();
  if (!search.found()) return {set_size(trivial), trivial};
  return {search.best_size(), search.best_cover()};
}

/// A vertex cover of size at most k, if one exists.
inline std::optional<VertexSet> cover_at_most(const Graph& g, int k) {
  if (k < 0) return std::nullopt;
  detail::CoverSearch search(g, k + 1, k);
  search.run();
  if (!search.found()) return std::nullopt;
  return search.best_cover();
}

inline constexpr int kBruteForceCoverLimit = 24;

/// Exhaustive subset scan; the independent oracle for min_vertex_cover.
inline int brute_force_cover(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceCoverLimit)
    throw std::invalid_argument("brute_force_cover supports at most 24 vertices, got " + std::to_string(n));
  int best = n;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int size = set_size(mask);
    if (size < best && is_vertex_cover(g, mask)) best = size;
  }
  return best;
}

/// Independence number via n - tau.
inline int alpha(const Graph& g) { return g.order() - min_vertex_cover(g).size; }

struct EdgeWitness {
  Edge edge;
  VertexSet cover = 0;  // cover of G - edge of size tau - 1
};

struct TauCertificate {
  int tau = 0;
  VertexSet cover = 0;
  bool critical = false;
  std::vector<EdgeWitness> edge_witnesses;  // one per edge, iff critical
  std::optional<Edge> failing_edge;
  std::optional<int> isolated_vertex;
};

/// Computes tau and decides tau-criticality: no isolated vertex and
/// tau(G - e) = tau - 1 for every edge e. Graphs without edges are never
/// critical.
inline TauCertificate certify_tau_critical(const Graph& g) {
  TauCertificate cert;
  const CoverResult best = min_vertex_cover(g);
  cert.tau = best.size;
  cert.cover = best.witness;

  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      cert.isolated_vertex = v;
      return cert;
    }
  }
  const std::vector<Edge> edges = g.edges();
  if (edges.empty()) return cert;

  for (const Edge& e : edges) {
    const std::optional<VertexSet> smaller = cover_at_most(g.without_edge(e), cert.tau - 1);
    if (!smaller) {
      cert.failing_edge = e;
      cert.edge_witnesses.clear();
      return cert;
    }
    cert.edge_witnesses.push_back({e, *smaller});
  }
  cert.critical = true;
  return cert;
}

}  // namespace taucrit
