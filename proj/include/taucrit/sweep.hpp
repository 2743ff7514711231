#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <openssl/evp.h>

#include "taucrit/battery.hpp"
#include "taucrit/enumerate.hpp"
#include "taucrit/family.hpp"
#include "taucrit/graph6.hpp"
#include "taucrit/report.hpp"

namespace taucrit {

enum class ReportFormat { json, csv };

/// |lhs - rhs| below this counts as numerically tight.
inline constexpr double kNumericAgreement = 1e-6;

struct SweepConfig {
  int n_max = kNativeEnumerationMaxOrder;
  std::vector<Rational> r_values;  // empty: automatic, see LawPlan
  std::vector<LawId> laws;         // empty: all
  double tol = kDefaultTolerance;
  std::optional<std::string> corpus_path;
  ReportFormat format = ReportFormat::json;
  int jobs = 1;
  bool inject_fault = false;  // decrements every right-hand side
  int suranyi_cap = 14;

  void validate() const {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    if (!corpus_path && n_max > kNativeEnumerationMaxOrder)
      throw EnumerationCapExceeded("native sweeps support n_max <= 7; pass a graph6 corpus for larger orders");
    if (n_max > kMaxVertices) throw std::invalid_argument("n_max above 64");
    if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be positive");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    for (const Rational& r : r_values)
      if (r < Rational(0)) throw std::invalid_argument("r must be nonnegative, got " + r.to_string());
  }

  std::vector<LawId> effective_laws() const {
    if (laws.empty()) return {kAllLaws.begin(), kAllLaws.end()};
    return laws;
  }

  /// Everything that determines the report's content. `jobs` is left out:
  /// it changes scheduling, never results.
  json to_json() const {
    json r = json::array();
    for (const Rational& v : r_values) r.push_back(v.to_string());
    json l = json::array();
    for (LawId id : effective_laws()) l.push_back(std::string(to_string(id)));
    return {
        {"n_max", n_max},
        {"r_values", r_values.empty() ? json("auto") : r},
        {"laws", l},
        {"tol", tol},
        {"corpus", corpus_path ? json(*corpus_path) : json(nullptr)},
        {"inject_fault", inject_fault},
        {"suranyi_cap", suranyi_cap},
    };
  }
};

struct SweepOutcome {
  json report;
  std::string csv;
  int exit_code = 0;
};

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace detail {

// Runs f(i) for i in [0, count) on `jobs` threads, round-robin by index.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, jobs), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) f(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct CensusKey {
  LawId law;
  std::optional<Rational> r;
  friend auto operator<=>(const CensusKey& a, const CensusKey& b) {
    if (auto c = a.law <=> b.law; c != 0) return c;
    if (a.r.has_value() != b.r.has_value()) return a.r.has_value() <=> b.r.has_value();
    if (!a.r) return std::strong_ordering::equal;
    return *a.r <=> *b.r;
  }
  friend bool operator==(const CensusKey& a, const CensusKey& b) { return (a <=> b) == 0; }
};

}  // namespace detail

/// Verifies every planned law on every tau-critical graph up to n_max
/// (native enumeration, or the corpus when one is given), then compares the
/// equality holders of each law against its stated extremal list in both
/// directions. Exit code 0 iff no violation, no anomaly and a matching census.
inline SweepOutcome run_sweep(const SweepConfig& cfg) {
  cfg.validate();

  json corpus = nullptr;
  std::vector<Graph> graphs;
  if (cfg.corpus_path) {
    std::ifstream in(*cfg.corpus_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus: " + *cfg.corpus_path);
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream stream(bytes);
    for (Graph& g : ingest_graph6(stream, true).graphs)
      if (g.order() <= cfg.n_max) graphs.push_back(std::move(g));
    corpus = {{"path", *cfg.corpus_path}, {"sha256", sha256_hex(bytes)}, {"records_in_range", graphs.size()}};
  } else {
    for (int n = 1; n <= cfg.n_max; ++n) {
      std::vector<Graph> level = enumerate_graphs(n, cfg.jobs);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
  }

  std::vector<TauCertificate> certs(graphs.size());
  detail::parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) { certs[i] = certify_tau_critical(graphs[i]); });

  std::vector<std::size_t> critical;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (certs[i].critical) critical.push_back(i);

  LawPlan plan;
  plan.laws = cfg.effective_laws();
  plan.r_values = cfg.r_values;
  plan.options.tol = cfg.tol;
  plan.options.rhs_shift = cfg.inject_fault ? 1 : 0;
  plan.options.suranyi_cap = cfg.suranyi_cap;

  std::vector<Battery> batteries(critical.size());
  detail::parallel_for(critical.size(), cfg.jobs, [&](std::size_t k) {
    batteries[k] = run_battery(graphs[critical[k]], certs[critical[k]], plan);
  });

  // Census and per-report checks, sequential and in graph order.
  std::map<detail::CensusKey, std::set<std::string>> observed;
  std::set<detail::CensusKey> census_keys;
  std::set<std::string> present_families;
  int max_tau = 0;
  for (std::size_t k = 0; k < critical.size(); ++k) {
    max_tau = std::max(max_tau, certs[critical[k]].tau);
    if (auto f = match_family(graphs[critical[k]])) present_families.insert(f->to_string());
  }
  for (LawId law : plan.laws) {
    if (!has_equality_list(law)) continue;
    if (law == LawId::half) {
      for (const Rational& r : plan.half_values()) census_keys.insert({law, r});
    } else if (takes_integer_r(law)) {
      if (cfg.r_values.empty()) {
        for (int r = 0; r <= max_tau; ++r) census_keys.insert({law, Rational(r)});
      } else {
        for (const Rational& r : cfg.r_values)
          if (r.is_integer()) census_keys.insert({law, r});
      }
    } else {
      census_keys.insert({law, std::nullopt});
    }
  }

  json graph_docs = json::array();
  json violations = json::array();
  json anomalies = json::array();
  std::string csv = csv_header();
  long checks = 0;
  long equalities = 0;
  long skipped = 0;

  for (std::size_t k = 0; k < critical.size(); ++k) {
    const Graph& g = graphs[critical[k]];
    const Battery& b = batteries[k];
    const std::string g6 = to_graph6(g);
    const std::optional<FamilyDescriptor> family = match_family(g);
    json laws = json::array();
    skipped += static_cast<long>(b.skipped.size());
    for (const LawReport& rep : b.reports) {
      ++checks;
      laws.push_back(to_json(rep));
      csv += csv_row(g6, rep);
      if (rep.equality) ++equalities;
      if (!rep.holds) {
        violations.push_back({{"law", std::string(to_string(rep.law))},
                              {"r", rep.r ? json(rep.r->to_string()) : json(nullptr)},
                              {"graph6", g6},
                              {"detail", rep.evidence ? rep.evidence->detail : ""}});
      }
      auto anomaly = [&](const std::string& what) {
        anomalies.push_back({{"law", std::string(to_string(rep.law))},
                             {"r", rep.r ? json(rep.r->to_string()) : json(nullptr)},
                             {"graph6", g6},
                             {"detail", what}});
      };
      if (is_spectral(rep.law) && rep.holds) {
        const double gap = std::abs(rep.lhs.mid() - rep.rhs.mid());
        if (rep.equality && gap > kNumericAgreement) anomaly("structural equality but |lhs - rhs| = " + format12(gap));
        if (!rep.equality && gap <= kNumericAgreement) anomaly("numerically tight without structural equality");
      }
      if (rep.equality && has_equality_list(rep.law)) {
        if (!rep.family) {
          anomaly("equality holder matches no extremal family");
        } else {
          const detail::CensusKey key{rep.law, rep.r};
          if (census_keys.contains(key)) observed[key].insert(rep.family->to_string());
        }
      }
    }
    json doc = {{"graph6", g6},
                {"n", g.order()},
                {"m", g.size()},
                {"t", certs[critical[k]].tau},
                {"lambda1", to_json(b.lambda)},
                {"q1", to_json(b.q)},
                {"laws", laws},
                {"skipped", b.skipped}};
    doc["family"] = family ? json(family->to_string()) : json(nullptr);
    graph_docs.push_back(std::move(doc));
  }

  json census = json::array();
  bool census_ok = true;
  for (const detail::CensusKey& key : census_keys) {
    std::set<std::string> expected;
    for (const EqualityEntry& e : equality_list(key.law, key.r.value_or(Rational(0)), cfg.n_max)) {
      const std::string name = e.family.to_string();
      // A corpus is not exhaustive: only members it contains can be demanded.
      if (!cfg.corpus_path || present_families.contains(name)) expected.insert(name);
    }
    const std::set<std::string>& seen = observed[key];
    std::vector<std::string> missing, unexpected;
    std::set_difference(expected.begin(), expected.end(), seen.begin(), seen.end(), std::back_inserter(missing));
    std::set_difference(seen.begin(), seen.end(), expected.begin(), expected.end(), std::back_inserter(unexpected));
    const bool ok = missing.empty() && unexpected.empty();
    census_ok = census_ok && ok;
    json entry = {{"law", std::string(to_string(key.law))},
                  {"observed", std::vector<std::string>(seen.begin(), seen.end())},
                  {"expected", std::vector<std::string>(expected.begin(), expected.end())},
                  {"missing", missing},
                  {"unexpected", unexpected},
                  {"ok", ok}};
    entry["r"] = key.r ? json(key.r->to_string()) : json(nullptr);
    census.push_back(std::move(entry));
  }

  const bool clean = violations.empty() && anomalies.empty() && census_ok;
  SweepOutcome out;
  out.exit_code = clean ? 0 : 1;
  out.csv = std::move(csv);
  out.report = {
      {"schema_version", kReportSchemaVersion},
      {"header", clean ? "verified: no violations, census matches the stated extremal lists"
                       : "FAILED: a nonzero exit is a potential counterexample or an implementation bug; "
                         "see violations, anomalies and census"},
      {"config", cfg.to_json()},
      {"corpus", corpus},
      {"summary",
       {{"graphs_scanned", graphs.size()},
        {"critical_graphs", critical.size()},
        {"checks", checks},
        {"equalities", equalities},
        {"violations", violations.size()},
        {"anomalies", anomalies.size()},
        {"skipped", skipped},
        {"census_ok", census_ok},
        {"exit_code", out.exit_code}}},
      {"graphs", graph_docs},
      {"census", census},
      {"violations", violations},
      {"anomalies", anomalies},
  };
  if (const auto problems = validate_sweep_report(out.report); !problems.empty())
    throw std::logic_error("sweep report fails its schema: " + problems.front());
  return out;
}

inline std::string render(const SweepOutcome& outcome, ReportFormat format) {
  return format == ReportFormat::json ? outcome.report.dump(2) + "\n" : outcome.csv;
}

}  // namespace taucrit
