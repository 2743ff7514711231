#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "taucrit/canonical.hpp"
#include "taucrit/cover.hpp"
#include "taucrit/graph.hpp"
#include "taucrit/graph6.hpp"

namespace taucrit {

inline constexpr int kNativeEnumerationMaxOrder = 7;

class EnumerationCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One representative per isomorphism class on n vertices, in increasing
/// canonical-key order. Scans all 2^C(n,2) labelled graphs and keeps exactly
/// those whose labelling is canonical. The mask range is split into `jobs`
/// contiguous slices; output does not depend on `jobs`.
inline std::vector<Graph> enumerate_graphs(int n, int jobs = 1) {
  if (n < 0) throw std::invalid_argument("order must be nonnegative");
  if (n > kNativeEnumerationMaxOrder)
    throw EnumerationCapExceeded("native enumeration supports n <= 7, got " + std::to_string(n) +
                                 "; generate larger orders externally and read them with ingest_graph6");
  jobs = std::max(1, jobs);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const std::uint64_t slices = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);

  std::vector<std::vector<Graph>> found(slices);
  auto scan = [&](std::uint64_t slice) {
    const std::uint64_t begin = total * slice / slices;
    const std::uint64_t end = total * (slice + 1) / slices;
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      Graph g = graph_from_key_bits(n, bits);
      if (is_canonical_labelling(g)) found[slice].push_back(g);
    }
  };

  if (slices == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> workers;
    for (std::uint64_t s = 0; s < slices; ++s) workers.emplace_back(scan, s);
  }

  std::vector<Graph> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

struct CriticalGraph {
  Graph graph;
  TauCertificate certificate;
};

inline std::vector<CriticalGraph> filter_tau_critical(const std::vector<Graph>& graphs) {
  std::vector<CriticalGraph> out;
  for (const Graph& g : graphs) {
    TauCertificate cert = certify_tau_critical(g);
    if (cert.critical) out.push_back({g, std::move(cert)});
  }
  return out;
}

/// The tau-critical representatives among enumerate_graphs(n).
inline std::vector<CriticalGraph> enumerate_tau_critical(int n, int jobs = 1) {
  return filter_tau_critical(enumerate_graphs(n, jobs));
}

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

class IngestFailure : public std::runtime_error {
 public:
  IngestFailure(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<IngestError> errors;
};

/// Newline-separated graph6 records, input order kept, no deduplication.
/// Blank lines are skipped. With fail_fast the first bad record throws
/// IngestFailure; otherwise bad records are collected in `errors`.
inline IngestResult ingest_graph6(std::istream& in, bool fail_fast = true) {
  IngestResult result;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    try {
      result.graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      if (fail_fast) throw IngestFailure(number, e.what());
      result.errors.push_back({number, e.what()});
    }
  }
  return result;
}

inline IngestResult ingest_graph6(const std::string& path, bool fail_fast = true) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  return ingest_graph6(in, fail_fast);
}

}  // namespace taucrit
