#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "taucrit/graph.hpp"

namespace taucrit {

inline constexpr int kCanonicalKeyMaxOrder = 10;

/// Minimum upper-triangle bit string over all vertex permutations.
///
/// Bit order follows graph6: (0,1), (0,2), (1,2), (0,3), ...; the first pair is
/// the most significant bit of `bits`. Equal keys iff isomorphic graphs.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;

  std::string to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%d:%012llx", n, static_cast<unsigned long long>(bits));
    return buf;
  }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose identity-labelled upper triangle is `bits` (MSB-first, as in CanonicalKey).
inline Graph graph_from_key_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int k = pair_count(n) - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --k)
      if ((bits >> k) & 1U) g.add_edge(i, j);
  return g;
}

inline std::uint64_t key_bits_of_labelling(const Graph& g) {
  std::uint64_t bits = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.has_edge(i, j) ? 1U : 0U);
  return bits;
}

namespace detail {

// Depth-first search over vertex orders. Placing vertex v at position p fixes
// column p of the upper triangle: the p bits adj(order[0], v) ... adj(order[p-1], v).
// A prefix is pruned as soon as it compares greater than the incumbent.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  // Smallest string over all orders.
  std::uint64_t minimum() {
    have_best_ = false;
    stop_on_smaller_ = false;
    descend(0, 0, 0);
    return best_;
  }

  // True iff no order yields a string smaller than `reference`.
  bool none_smaller_than(std::uint64_t reference) {
    best_ = reference;
    have_best_ = true;
    stop_on_smaller_ = true;
    found_smaller_ = false;
    descend(0, 0, 0);
    return !found_smaller_;
  }

 private:
  // Column p of `bits` in a full string of pair_count(n_) bits.
  std::uint64_t column(std::uint64_t bits, int p) const {
    const int end = pair_count(p + 1);
    const int shift = pair_count(n_) - end;
    return (bits >> shift) & ((std::uint64_t{1} << p) - 1);
  }

  // Leading pair_count(p) bits of `bits`.
  std::uint64_t leading(std::uint64_t bits, int p) const { return bits >> (pair_count(n_) - pair_count(p)); }

  void descend(int p, VertexSet used, std::uint64_t prefix) {
    if (p == n_) {
      if (!have_best_ || prefix < best_) {
        if (stop_on_smaller_) {
          found_smaller_ = true;
          return;
        }
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used & vertex_bit(v)) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < p; ++i) col = (col << 1) | ((g_.neighbors(order_[i]) >> v) & 1U);
      // Only a prefix equal to the incumbent's can be pruned or beaten here;
      // a strictly smaller prefix already beats it.
      if (have_best_ && prefix == leading(best_, p)) {
        const std::uint64_t ref = column(best_, p);
        if (col > ref) continue;
        if (col < ref && stop_on_smaller_) {
          found_smaller_ = true;
          return;
        }
      }
      order_[p] = v;
      descend(p + 1, used | vertex_bit(v), (prefix << p) | col);
      if (found_smaller_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kCanonicalKeyMaxOrder> order_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  bool stop_on_smaller_ = false;
  bool found_smaller_ = false;
};

inline void require_key_order(int n) {
  if (n > kCanonicalKeyMaxOrder)
    throw std::invalid_argument("canonical keys support at most 10 vertices, got " + std::to_string(n));
}

}  // namespace detail

inline CanonicalKey canonical_key(const Graph& g) {
  detail::require_key_order(g.order());
  return {g.order(), detail::CanonicalSearch(g).minimum()};
}

/// True iff the identity labelling of g already is its canonical form.
inline bool is_canonical_labelling(const Graph& g) {
  detail::require_key_order(g.order());
  return detail::CanonicalSearch(g).none_smaller_than(key_bits_of_labelling(g));
}

}  // namespace taucrit
