#pragma once

#include <algorithm>
#include <charconv>
#include <tuple>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "taucrit/graph.hpp"
#include "taucrit/law_id.hpp"
#include "taucrit/rational.hpp"

namespace taucrit {

enum class FamilyKind {
  all_matching,             // t K2
  complete_plus_matching,   // K_{s+1} + (t-s) K2, 2 <= s <= t
  odd_cycle_plus_matching,  // C_{2s-1} + (t-s) K2, 2 <= s <= t
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Symbolic name of an extremal graph. `s` is the transversal number of the
/// non-K2 component and is ignored (kept at 0) for all_matching.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::all_matching;
  int s = 0;
  int t = 1;

  int order() const {
    switch (kind) {
      case FamilyKind::all_matching: return 2 * t;
      case FamilyKind::complete_plus_matching: return (s + 1) + 2 * (t - s);
      case FamilyKind::odd_cycle_plus_matching: return (2 * s - 1) + 2 * (t - s);
    }
    return 0;
  }

  int matching_count() const { return kind == FamilyKind::all_matching ? t : t - s; }

  void validate() const {
    if (kind == FamilyKind::all_matching) {
      if (t < 1) throw FamilyError("all-matching family needs t >= 1");
      if (s != 0) throw FamilyError("all-matching family takes no s");
    } else if (s < 2 || s > t) {
      throw FamilyError("family needs 2 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    }
  }

  /// C3 is reported as K3.
  FamilyDescriptor canonical() const {
    if (kind == FamilyKind::odd_cycle_plus_matching && s == 2) return {FamilyKind::complete_plus_matching, 2, t};
    return *this;
  }

  /// "4K2", "K5", "K5+2K2", "C7+1K2".
  std::string to_string() const {
    if (kind == FamilyKind::all_matching) return std::to_string(t) + "K2";
    std::string head = kind == FamilyKind::complete_plus_matching ? "K" + std::to_string(s + 1)
                                                                  : "C" + std::to_string(2 * s - 1);
    if (t > s) head += "+" + std::to_string(t - s) + "K2";
    return head;
  }

  static FamilyDescriptor parse(std::string_view text) {
    auto fail = [&]() -> FamilyDescriptor {
      throw FamilyError("not a family descriptor: '" + std::string(text) + "'");
    };
    auto read_int = [&](std::string_view& s) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr == s.data()) fail();
      s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
      return value;
    };
    auto read_matching = [&](std::string_view& s) {
      const int count = read_int(s);
      if (s != "K2") fail();
      return count;
    };

    std::string_view rest = text;
    FamilyDescriptor d;
    if (!rest.empty() && (rest.front() == 'K' || rest.front() == 'C')) {
      const bool complete = rest.front() == 'K';
      rest.remove_prefix(1);
      const int order = read_int(rest);
      int extra = 0;
      if (!rest.empty()) {
        if (rest.front() != '+') fail();
        rest.remove_prefix(1);
        extra = read_matching(rest);
        if (extra < 1) fail();
      }
      if (complete) {
        d = {FamilyKind::complete_plus_matching, order - 1, order - 1 + extra};
      } else {
        if (order % 2 == 0) fail();
        d = {FamilyKind::odd_cycle_plus_matching, (order + 1) / 2, (order + 1) / 2 + extra};
      }
    } else {
      d = {FamilyKind::all_matching, 0, read_matching(rest)};
    }
    d.validate();
    return d.canonical();
  }

  friend auto operator<=>(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// K_{t+1}. For t = 1 this is K2, i.e. the all-matching family with t = 1.
inline FamilyDescriptor complete_family(int t) {
  if (t == 1) return {FamilyKind::all_matching, 0, 1};
  return {FamilyKind::complete_plus_matching, t, t};
}

/// K_order + matchings K2, normalised (K2 folds into the matching).
inline FamilyDescriptor clique_with_matching(int order, int matchings) {
  if (order == 2) return {FamilyKind::all_matching, 0, matchings + 1};
  return {FamilyKind::complete_plus_matching, order - 1, order - 1 + matchings};
}

/// C_length + matchings K2 for odd length, normalised (C3 reported as K3).
inline FamilyDescriptor cycle_with_matching(int length, int matchings) {
  const int s = (length + 1) / 2;
  return FamilyDescriptor{FamilyKind::odd_cycle_plus_matching, s, s + matchings}.canonical();
}

inline Graph build_family(const FamilyDescriptor& d) {
  d.validate();
  if (d.order() > kMaxVertices) throw FamilyError("family member " + d.to_string() + " exceeds 64 vertices");
  switch (d.kind) {
    case FamilyKind::all_matching:
      return matching(d.t);
    case FamilyKind::complete_plus_matching:
      return disjoint_union(complete(d.s + 1), matching(d.t - d.s));
    case FamilyKind::odd_cycle_plus_matching:
      return disjoint_union(cycle(2 * d.s - 1), matching(d.t - d.s));
  }
  throw FamilyError("unknown family kind");
}

/// Recognizes t K2, K_{s+1} + (t-s) K2 and C_{2s-1} + (t-s) K2 up to isomorphism.
inline std::optional<FamilyDescriptor> match_family(const Graph& g) {
  int k2 = 0;
  std::optional<Graph> special;
  for (const Component& c : components(g).parts) {
    const int p = c.graph.order();
    if (p == 2) {
      ++k2;
    } else if (special) {
      return std::nullopt;
    } else {
      special = c.graph;
    }
  }
  if (!special) {
    if (k2 == 0) return std::nullopt;
    return FamilyDescriptor{FamilyKind::all_matching, 0, k2};
  }

  const int p = special->order();
  if (p < 3) return std::nullopt;
  const int m = special->size();
  if (m == p * (p - 1) / 2) return clique_with_matching(p, k2);
  if (p % 2 == 1 && m == p && is_regular(*special)) return cycle_with_matching(p, k2);  // connected 2-regular
  return std::nullopt;
}

/// One extremal graph in a stated equality list. `source` names the list
/// entry that produced it; `half_integral_reading` marks Remark-style entries
/// whose matching count is (r - 1/2) or (3 + 2r - 2s)/2 for half-integral r.
struct EqualityEntry {
  FamilyDescriptor family;
  std::string source;
  bool half_integral_reading = false;
};

class UnsupportedEqualityList : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class EqualityListBuilder {
 public:
  explicit EqualityListBuilder(int n_cap) : n_cap_(n_cap) {}

  void add(const FamilyDescriptor& d, std::string_view source, bool half = false) {
    const FamilyDescriptor c = d.canonical();
    c.validate();
    if (c.order() > n_cap_) return;
    for (EqualityEntry& e : entries_) {
      if (e.family == c) {
        if (e.source.find(source) == std::string::npos) e.source += " | " + std::string(source);
        return;
      }
    }
    entries_.push_back({c, std::string(source), half});
  }

  // Every t whose smallest possible member (order t + 1) fits under the cap.
  int t_max() const { return n_cap_ - 1; }

  std::vector<EqualityEntry> finish() {
    std::sort(entries_.begin(), entries_.end(), [](const EqualityEntry& a, const EqualityEntry& b) {
      return std::tuple(a.family.order(), a.family.t, a.family) < std::tuple(b.family.order(), b.family.t, b.family);
    });
    return std::move(entries_);
  }

 private:
  int n_cap_;
  std::vector<EqualityEntry> entries_;
};

inline void add_complete_list(EqualityListBuilder& b) {
  for (int t = 1; t <= b.t_max(); ++t) b.add(complete_family(t), "K_{t+1}");
}

inline void add_order_size_list(EqualityListBuilder& b) {
  add_complete_list(b);
  b.add({FamilyKind::all_matching, 0, 2}, "2K2");
  b.add(cycle_with_matching(5, 0), "C5");
}

inline void add_order_spectral_list(EqualityListBuilder& b) {
  for (int t = 1; t <= b.t_max(); ++t) {
    b.add({FamilyKind::all_matching, 0, t}, "tK2");
    for (int s = 2; s <= t; ++s) {
      b.add({FamilyKind::complete_plus_matching, s, t}, "K_{s+1}+(t-s)K2");
      b.add({FamilyKind::odd_cycle_plus_matching, s, t}, "C_{2s-1}+(t-s)K2");
    }
  }
}

inline int integer_r(LawId law, const Rational& r) {
  if (!r.is_integer() || r < Rational(0))
    throw UnsupportedEqualityList(std::string(to_string(law)) + " needs a nonnegative integer r, got " + r.to_string());
  return static_cast<int>(r.num());
}

inline void add_spect_list(EqualityListBuilder& b, int r) {
  if (r == 0) {
    add_complete_list(b);
    return;
  }
  if (r == 1) {
    add_complete_list(b);
    for (int t = 2; t <= b.t_max(); ++t) b.add(clique_with_matching(t, 1), "K_t+K2 (t>=2)");
    b.add(cycle_with_matching(5, 0), "C5");
    return;
  }
  b.add({FamilyKind::all_matching, 0, r}, "rK2");
  b.add({FamilyKind::all_matching, 0, r + 1}, "(r+1)K2");
  for (int t = r; t <= b.t_max(); ++t) b.add(clique_with_matching(t - r + 2, r - 1), "K_{t-r+2}+(r-1)K2");
  for (int t = r + 2; t <= b.t_max(); ++t) b.add(clique_with_matching(t - r + 1, r), "K_{t-r+1}+rK2 (r<=t-2)");
  for (int s = 2; s <= r + 1; ++s) b.add(cycle_with_matching(2 * s - 1, r + 1 - s), "C_{2s-1}+(r+1-s)K2");
  for (int s = 2; s <= r + 2; ++s) b.add(cycle_with_matching(2 * s - 1, r + 2 - s), "C_{2s-1}+(r+2-s)K2");
}

inline void add_half_list(EqualityListBuilder& b, const Rational& r) {
  if (r < Rational(0)) throw UnsupportedEqualityList("HALF needs r >= 0, got " + r.to_string());
  const Rational twice = r * Rational(2);
  if (!twice.is_integer() || twice.num() % 2 == 0) return;  // equality needs 2r odd
  if (r == Rational(1, 2)) {
    add_complete_list(b);
    return;
  }
  const int h = static_cast<int>((r - Rational(1, 2)).num());  // r - 1/2, a positive integer
  b.add({FamilyKind::all_matching, 0, h + 1}, "((2r+1)/2)K2", true);
  for (int t = h + 1; t <= b.t_max(); ++t) b.add(clique_with_matching(t - h + 1, h), "K_{t-r+3/2}+(r-1/2)K2", true);
  for (int s = 2; s <= h + 2; ++s) b.add(cycle_with_matching(2 * s - 1, h + 2 - s), "C_{2s-1}+((3+2r-2s)/2)K2", true);
}

}  // namespace detail

/// The stated extremal graphs of `law` at parameter r, materialized for every
/// t whose member has at most n_cap vertices.
inline std::vector<EqualityEntry> equality_list(LawId law, const Rational& r, int n_cap) {
  if (n_cap < 0 || n_cap > kMaxVertices) throw UnsupportedEqualityList("n_cap outside [0, 64]");
  detail::EqualityListBuilder b(n_cap);
  switch (law) {
    case LawId::ehm:
    case LawId::lam1:
    case LawId::q1_lam1:
      detail::add_complete_list(b);
      break;
    case LawId::gl:
      detail::add_order_size_list(b);
      break;
    case LawId::rvpe: {
      const int ri = detail::integer_r(law, r);
      if (ri == 0) {
        detail::add_complete_list(b);
      } else if (ri == 1) {
        detail::add_order_size_list(b);
      } else {
        b.add({FamilyKind::all_matching, 0, ri}, "rK2");
        b.add({FamilyKind::all_matching, 0, ri + 1}, "(r+1)K2");
        b.add(cycle_with_matching(2 * ri + 1, 0), "C_{2r+1}");
        b.add(cycle_with_matching(2 * ri + 3, 0), "C_{2r+3}");
      }
      break;
    }
    case LawId::nlam:
    case LawId::q1_nlam:
      detail::add_order_spectral_list(b);
      break;
    case LawId::spect:
    case LawId::q1_spect:
      detail::add_spect_list(b, detail::integer_r(law, r));
      break;
    case LawId::half:
      detail::add_half_list(b, r);
      break;
    default:
      throw UnsupportedEqualityList(std::string(to_string(law)) + " has no stated equality list");
  }
  return b.finish();
}

}  // namespace taucrit
