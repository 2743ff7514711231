#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "taucrit/cover.hpp"
#include "taucrit/law_report.hpp"

namespace taucrit {

/// Every degree is at most 2t + 1 - n.
inline LawReport check_hajnal(const Graph& g, const TauCertificate& cert, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::hajnal);
  int worst = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(worst)) worst = v;
  const int bound = 2 * cert.tau + 1 - g.order();
  LawReport rep = detail::integer_law(LawId::hajnal, g, cert, std::nullopt, g.degree(worst), bound, opts);
  if (rep.evidence) rep.evidence->detail = "vertex " + std::to_string(worst) + " has degree " + rep.evidence->detail;
  return rep;
}

class SuranyiCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// For every independent set S and v in S: d(v) <= |N(S)| - |S| + 1.
/// Reports the tightest pair (S, v); on violation the evidence names it.
inline LawReport check_suranyi(const Graph& g, const TauCertificate& cert, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::suranyi);
  if (g.order() > opts.suranyi_cap)
    throw SuranyiCapExceeded("independent-set sweep capped at " + std::to_string(opts.suranyi_cap) +
                             " vertices, graph has " + std::to_string(g.order()));

  struct Tightest {
    int slack = 1 << 30;
    VertexSet set = 0;
    int vertex = -1;
    int degree = 0;
    int bound = 0;
  } tightest;

  // Recursive inclusion/exclusion over vertices in increasing order.
  auto visit = [&](auto&& self, int next, VertexSet chosen, VertexSet blocked, VertexSet nbhd) -> void {
    if (chosen != 0) {
      const int bound = set_size(nbhd) - set_size(chosen) + 1 - static_cast<int>(opts.rhs_shift);
      int top = -1;
      for_each_vertex(chosen, [&](int v) {
        if (top < 0 || g.degree(v) > g.degree(top)) top = v;
      });
      const int slack = bound - g.degree(top);
      if (slack < tightest.slack) tightest = {slack, chosen, top, g.degree(top), bound};
    }
    for (int v = next; v < g.order(); ++v) {
      if (blocked & vertex_bit(v)) continue;
      self(self, v + 1, chosen | vertex_bit(v), blocked | g.neighbors(v) | vertex_bit(v), nbhd | g.neighbors(v));
    }
  };
  visit(visit, 0, 0, 0, 0);

  LawReport rep = detail::report_skeleton(LawId::suranyi, g, cert, std::nullopt);
  rep.lhs = Value::of(tightest.degree);
  rep.rhs = Value::of(tightest.bound);
  rep.holds = tightest.slack >= 0;
  rep.equality = tightest.slack == 0;
  std::string members;
  for_each_vertex(tightest.set, [&](int v) { members += (members.empty() ? "" : ",") + std::to_string(v); });
  detail::finish(rep, g,
                 "S={" + members + "} v=" + std::to_string(tightest.vertex) + ": d(v)=" +
                     std::to_string(tightest.degree) + " > |N(S)|-|S|+1=" + std::to_string(tightest.bound));
  return rep;
}

}  // namespace taucrit
