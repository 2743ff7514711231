#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "taucrit/graph.hpp"

namespace taucrit {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// Upper triangle in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
inline std::size_t graph6_body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

/// Decodes one graph6 record. Accepts the optional ">>graph6<<" prefix and
/// both the short (n <= 62) and the 4-byte (n <= 258047) order headers; rejects
/// orders above 64. Offsets in errors are relative to `text`.
inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header) pos = detail::kGraph6Header.size();
  if (pos >= text.size()) throw Graph6Error("empty graph6 record", pos);

  const char lead = text[pos];
  if (lead == ':') throw Graph6Error("sparse6 records are not supported", pos);
  if (lead == '&') throw Graph6Error("digraph6 records are not supported", pos);

  auto byte_value = [&](std::size_t at) -> int {
    if (at >= text.size()) throw Graph6Error("truncated graph6 record", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range 63..126", at);
    return c - 63;
  };

  int n = 0;
  if (lead == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw Graph6Error("order too large (8-byte header); at most 64 vertices supported", pos);
    long value = 0;
    for (int k = 1; k <= 3; ++k) value = (value << 6) | byte_value(pos + k);
    if (value > kMaxVertices) throw Graph6Error("order " + std::to_string(value) + " exceeds 64", pos);
    n = static_cast<int>(value);
    pos += 4;
  } else {
    n = byte_value(pos);
    pos += 1;
  }

  const std::size_t body = detail::graph6_body_length(n);
  if (text.size() < pos + body) throw Graph6Error("truncated graph6 record", text.size());
  if (text.size() > pos + body) throw Graph6Error("trailing data after graph6 record", pos + body);

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int chunk = byte_value(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int chunk = byte_value(pos + bit / 6);
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if ((chunk & pad_mask) != 0) throw Graph6Error("nonzero padding bits", pos + bit / 6);
  }
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

}  // namespace taucrit
