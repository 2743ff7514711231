#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "taucrit/cover.hpp"
#include "taucrit/law_report.hpp"
#include "taucrit/spectral.hpp"

namespace taucrit {

using json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

/// Rounds to 12 significant digits so that reports are byte-stable.
inline double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double y = std::strtod(buf, nullptr);
  return y == 0 ? 0.0 : y;  // no "-0.0"
}

inline std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

inline json vertex_list(VertexSet s) {
  json out = json::array();
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline json to_json(const Value& v) {
  json out = {{"lo", round12(v.lo)}, {"hi", round12(v.hi)}};
  out["exact"] = v.exact ? json(v.exact->to_string()) : json(nullptr);
  return out;
}

inline json to_json(const SpectralInterval& s) {
  return {{"kind", to_string(s.kind)}, {"lo", round12(s.lo)}, {"hi", round12(s.hi)}};
}

inline json to_json(const TauCertificate& c) {
  json witnesses = json::array();
  for (const EdgeWitness& w : c.edge_witnesses)
    witnesses.push_back({{"edge", {w.edge.u, w.edge.v}}, {"cover", vertex_list(w.cover)}});
  json out = {
      {"tau", c.tau},
      {"cover", vertex_list(c.cover)},
      {"critical", c.critical},
      {"edge_witnesses", witnesses},
  };
  out["failing_edge"] = c.failing_edge ? json({c.failing_edge->u, c.failing_edge->v}) : json(nullptr);
  out["isolated_vertex"] = c.isolated_vertex ? json(*c.isolated_vertex) : json(nullptr);
  return out;
}

inline json to_json(const LawReport& r) {
  json out = {
      {"law", std::string(to_string(r.law))},
      {"n", r.n},
      {"m", r.m},
      {"t", r.t},
      {"holds", r.holds},
      {"lhs", to_json(r.lhs)},
      {"rhs", to_json(r.rhs)},
      {"slack", to_json(r.slack)},
      {"equality", r.equality},
      {"notes", r.notes},
  };
  out["r"] = r.r ? json(r.r->to_string()) : json(nullptr);
  out["family"] = r.family ? json(r.family->to_string()) : json(nullptr);
  out["evidence_graph6"] = r.evidence ? json(r.evidence->graph6) : json(nullptr);
  out["evidence"] = r.evidence ? json(r.evidence->detail) : json(nullptr);
  return out;
}

// ---------------------------------------------------------------------------
// CSV projection: one row per graph x law x r.

inline std::string csv_header() {
  return "graph6,law,r,n,m,t,holds,lhs_lo,lhs_hi,rhs_lo,rhs_hi,slack_lo,slack_hi,equality,family,evidence\n";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::string& graph6, const LawReport& r) {
  std::string row = csv_escape(graph6);
  auto cell = [&](const std::string& s) { row += "," + csv_escape(s); };
  cell(std::string(to_string(r.law)));
  cell(r.r ? r.r->to_string() : "");
  cell(std::to_string(r.n));
  cell(std::to_string(r.m));
  cell(std::to_string(r.t));
  cell(r.holds ? "true" : "false");
  for (const Value* v : {&r.lhs, &r.rhs, &r.slack}) {
    cell(format12(v->lo));
    cell(format12(v->hi));
  }
  cell(r.equality ? "true" : "false");
  cell(r.family ? r.family->to_string() : "");
  cell(r.evidence ? r.evidence->detail : "");
  return row + "\n";
}

// ---------------------------------------------------------------------------
// Schema checks. These run on every document before it is written.

namespace detail {

class SchemaChecker {
 public:
  void require(const json& obj, const std::string& path, const char* key, json::value_t type, bool nullable = false) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems_.push_back(path + "." + key + ": missing");
      return;
    }
    const json& v = obj.at(key);
    if (nullable && v.is_null()) return;
    const bool ok = type == json::value_t::number_float ? v.is_number() : v.type() == type ||
                        (type == json::value_t::number_integer && v.is_number_integer());
    if (!ok) problems_.push_back(path + "." + key + ": expected " + json(type).type_name() + ", got " + v.type_name());
  }

  void value(const json& obj, const std::string& path, const char* key) {
    require(obj, path, key, json::value_t::object);
    if (!obj.contains(key) || !obj.at(key).is_object()) return;
    const json& v = obj.at(key);
    const std::string p = path + "." + key;
    require(v, p, "lo", json::value_t::number_float);
    require(v, p, "hi", json::value_t::number_float);
    require(v, p, "exact", json::value_t::string, true);
  }

  void law_report(const json& r, const std::string& path) {
    require(r, path, "law", json::value_t::string);
    require(r, path, "r", json::value_t::string, true);
    for (const char* k : {"n", "m", "t"}) require(r, path, k, json::value_t::number_integer);
    require(r, path, "holds", json::value_t::boolean);
    for (const char* k : {"lhs", "rhs", "slack"}) value(r, path, k);
    require(r, path, "equality", json::value_t::boolean);
    require(r, path, "family", json::value_t::string, true);
    require(r, path, "evidence_graph6", json::value_t::string, true);
    require(r, path, "evidence", json::value_t::string, true);
    require(r, path, "notes", json::value_t::array);
    if (r.is_object() && r.contains("holds") && r.contains("evidence_graph6") && r["holds"].is_boolean() &&
        r["holds"].get<bool>() != r["evidence_graph6"].is_null())
      problems_.push_back(path + ": evidence must be present exactly when the law fails");
  }

  void interval(const json& obj, const std::string& path, const char* key) {
    require(obj, path, key, json::value_t::object);
    if (!obj.contains(key) || !obj.at(key).is_object()) return;
    const std::string p = path + "." + key;
    require(obj.at(key), p, "kind", json::value_t::string);
    require(obj.at(key), p, "lo", json::value_t::number_float);
    require(obj.at(key), p, "hi", json::value_t::number_float);
  }

  void law_array(const json& obj, const std::string& path, const char* key) {
    require(obj, path, key, json::value_t::array);
    if (!obj.contains(key) || !obj.at(key).is_array()) return;
    for (std::size_t i = 0; i < obj.at(key).size(); ++i)
      law_report(obj.at(key)[i], path + "." + key + "[" + std::to_string(i) + "]");
  }

  std::vector<std::string> take() { return std::move(problems_); }

 private:
  std::vector<std::string> problems_;
};

}  // namespace detail

/// Problems with a `check` document; empty when it conforms.
inline std::vector<std::string> validate_check_report(const json& doc) {
  detail::SchemaChecker c;
  using T = json::value_t;
  c.require(doc, "$", "schema_version", T::number_integer);
  c.require(doc, "$", "graph6", T::string);
  c.require(doc, "$", "n", T::number_integer);
  c.require(doc, "$", "m", T::number_integer);
  c.require(doc, "$", "certificate", T::object);
  c.require(doc, "$", "family", T::string, true);
  c.require(doc, "$", "critical", T::boolean);
  c.interval(doc, "$", "lambda1");
  c.interval(doc, "$", "q1");
  c.law_array(doc, "$", "sandwich");
  c.law_array(doc, "$", "laws");
  c.require(doc, "$", "skipped", T::array);
  c.require(doc, "$", "violations", T::number_integer);
  return c.take();
}

/// Problems with a `sweep` document; empty when it conforms.
inline std::vector<std::string> validate_sweep_report(const json& doc) {
  detail::SchemaChecker c;
  using T = json::value_t;
  c.require(doc, "$", "schema_version", T::number_integer);
  c.require(doc, "$", "header", T::string);
  c.require(doc, "$", "config", T::object);
  c.require(doc, "$", "corpus", T::object, true);
  c.require(doc, "$", "summary", T::object);
  if (doc.contains("summary") && doc["summary"].is_object()) {
    for (const char* k : {"graphs_scanned", "critical_graphs", "checks", "equalities", "violations", "anomalies",
                          "skipped"})
      c.require(doc["summary"], "$.summary", k, T::number_integer);
    c.require(doc["summary"], "$.summary", "census_ok", T::boolean);
    c.require(doc["summary"], "$.summary", "exit_code", T::number_integer);
  }
  c.require(doc, "$", "graphs", T::array);
  if (doc.contains("graphs") && doc["graphs"].is_array()) {
    for (std::size_t i = 0; i < doc["graphs"].size(); ++i) {
      const json& g = doc["graphs"][i];
      const std::string p = "$.graphs[" + std::to_string(i) + "]";
      c.require(g, p, "graph6", T::string);
      for (const char* k : {"n", "m", "t"}) c.require(g, p, k, T::number_integer);
      c.require(g, p, "family", T::string, true);
      c.interval(g, p, "lambda1");
      c.interval(g, p, "q1");
      c.law_array(g, p, "laws");
    }
  }
  c.require(doc, "$", "census", T::array);
  if (doc.contains("census") && doc["census"].is_array()) {
    for (std::size_t i = 0; i < doc["census"].size(); ++i) {
      const json& e = doc["census"][i];
      const std::string p = "$.census[" + std::to_string(i) + "]";
      c.require(e, p, "law", T::string);
      c.require(e, p, "r", T::string, true);
      for (const char* k : {"observed", "expected", "missing", "unexpected"}) c.require(e, p, k, T::array);
      c.require(e, p, "ok", T::boolean);
    }
  }
  c.require(doc, "$", "violations", T::array);
  c.require(doc, "$", "anomalies", T::array);
  return c.take();
}

}  // namespace taucrit
