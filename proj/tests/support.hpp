#pragma once

#include <string>

#include "oracles.hpp"
#include "taucrit/taucrit.hpp"

namespace testing_support {

inline oracle::Matrix to_matrix(const taucrit::Graph& g) {
  oracle::Matrix a = oracle::empty_matrix(g.order());
  for (const taucrit::Edge& e : g.edges()) oracle::connect(a, e.u, e.v);
  return a;
}

inline taucrit::Graph from_matrix(const oracle::Matrix& a) {
  taucrit::Graph g(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

inline taucrit::Graph family_graph(const std::string& name) {
  return taucrit::build_family(taucrit::FamilyDescriptor::parse(name));
}

}  // namespace testing_support
