// taucrit: command-line front end for the tau-critical graph verifier.
//
//   taucrit check <graph6> [--r LIST] [--tol X]
//   taucrit enumerate --n N [--critical]
//   taucrit sweep --max-n N [--corpus FILE] [--r LIST] [--laws LIST] [--out FILE] [--format json|csv] [--jobs K]
//   taucrit family --kind all-matching|k-matching|c-matching [--s S] --t T
//
// Exit codes: 0 verified, 1 violation evidence emitted, 2 usage or parse error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taucrit/taucrit.hpp"

namespace {

using namespace taucrit;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_r_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const std::string& s : items) {
    Rational r = Rational::parse(s);
    if (r < Rational(0)) throw UsageError("r must be nonnegative, got " + s);
    out.push_back(r);
  }
  return out;
}

std::vector<LawId> parse_law_list(const std::vector<std::string>& items) {
  std::vector<LawId> out;
  auto add = [&](LawId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (std::string s : items) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s == "ALL") {
      for (LawId id : kAllLaws) add(id);
    } else if (s == "Q1") {
      for (LawId id : {LawId::q1_nlam, LawId::q1_lam1, LawId::q1_spect}) add(id);
    } else if (s == "SANDWICH") {
      add(LawId::sandwich_lower);
      add(LawId::sandwich_upper);
    } else if (auto id = parse_law_id(s)) {
      add(*id);
    } else {
      throw UsageError("unknown law: " + s);
    }
  }
  return out;
}

int cmd_check(const std::string& record, const std::vector<std::string>& r_items, double tol) {
  const Graph g = parse_graph6(record);
  const TauCertificate cert = certify_tau_critical(g);
  const std::optional<FamilyDescriptor> family = match_family(g);

  json doc = {{"schema_version", kReportSchemaVersion},
              {"graph6", to_graph6(g)},
              {"n", g.order()},
              {"m", g.size()},
              {"certificate", to_json(cert)},
              {"critical", cert.critical}};
  doc["family"] = family ? json(family->to_string()) : json(nullptr);

  LawPlan plan;
  plan.r_values = parse_r_list(r_items);
  plan.strict_domain = true;
  plan.options.tol = tol;

  SpectralInterval lambda{0, 0, MatrixKind::adjacency};
  SpectralInterval q{0, 0, MatrixKind::signless_laplacian};
  if (g.order() > 0) {
    lambda = lambda1(g, PowerIterationOptions{tol});
    q = q1(g, PowerIterationOptions{tol});
  }
  doc["lambda1"] = to_json(lambda);
  doc["q1"] = to_json(q);

  json sandwich = json::array();
  json laws = json::array();
  json skipped = json::array();
  int violations = 0;
  if (g.order() > 0) {
    const SandwichReport s = check_sandwich(g, lambda, plan.options);
    for (LawReport rep : {s.lower, s.upper}) {
      rep.t = cert.tau;
      violations += rep.holds ? 0 : 1;
      sandwich.push_back(to_json(rep));
    }
  }
  if (cert.critical) {
    plan.laws.erase(std::remove_if(plan.laws.begin(), plan.laws.end(),
                                   [](LawId id) { return id == LawId::sandwich_lower || id == LawId::sandwich_upper; }),
                    plan.laws.end());
    const Battery b = run_battery(g, cert, plan);
    for (const LawReport& rep : b.reports) {
      violations += rep.holds ? 0 : 1;
      laws.push_back(to_json(rep));
    }
    for (const std::string& s : b.skipped) skipped.push_back(s);
  } else {
    skipped.push_back("not tau-critical: the laws apply only to tau-critical graphs");
  }
  doc["sandwich"] = sandwich;
  doc["laws"] = laws;
  doc["skipped"] = skipped;
  doc["violations"] = violations;

  if (const auto problems = validate_check_report(doc); !problems.empty())
    throw std::logic_error("check report fails its schema: " + problems.front());
  std::cout << doc.dump(2) << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_enumerate(int n, bool critical_only) {
  if (critical_only) {
    for (const CriticalGraph& c : enumerate_tau_critical(n)) std::cout << to_graph6(c.graph) << "\n";
  } else {
    for (const Graph& g : enumerate_graphs(n)) std::cout << to_graph6(g) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(SweepConfig cfg, const std::vector<std::string>& r_items, const std::vector<std::string>& law_items,
              const std::string& format, const std::string& out_path) {
  cfg.r_values = parse_r_list(r_items);
  cfg.laws = parse_law_list(law_items);
  if (format == "json")
    cfg.format = ReportFormat::json;
  else if (format == "csv")
    cfg.format = ReportFormat::csv;
  else
    throw UsageError("unknown format: " + format);

  const SweepOutcome outcome = run_sweep(cfg);
  const std::string text = render(outcome, cfg.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  const json& summary = outcome.report["summary"];
  std::cerr << outcome.report["header"].get<std::string>() << "\n"
            << "critical graphs " << summary["critical_graphs"] << ", checks " << summary["checks"]
            << ", violations " << summary["violations"] << ", anomalies " << summary["anomalies"] << ", census "
            << (summary["census_ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  return outcome.exit_code;
}

int cmd_family(const std::string& kind, std::optional<int> s, int t) {
  FamilyDescriptor d;
  if (kind == "all-matching") {
    if (s) throw UsageError("all-matching takes no --s");
    d = {FamilyKind::all_matching, 0, t};
  } else if (kind == "k-matching" || kind == "c-matching") {
    if (!s) throw UsageError(kind + " needs --s");
    d = {kind == "k-matching" ? FamilyKind::complete_plus_matching : FamilyKind::odd_cycle_plus_matching, *s, t};
  } else {
    throw UsageError("unknown family kind: " + kind);
  }
  const Graph g = build_family(d);  // validates the descriptor
  std::cout << to_graph6(g) << "\n";

  const TauCertificate cert = certify_tau_critical(g);
  std::cout << "family " << d.canonical().to_string() << "\n"
            << "n " << g.order() << "\n"
            << "m " << g.size() << "\n"
            << "tau " << cert.tau << (cert.tau == d.t ? "" : " (expected " + std::to_string(d.t) + ")") << "\n"
            << "critical " << (cert.critical ? "yes" : "no") << "\n";
  if (!cert.critical) return kExitViolation;

  LawPlan plan;
  const Battery b = run_battery(g, cert, plan);
  bool nlam_tight = false;
  bool all_hold = true;
  std::string equalities;
  for (const LawReport& rep : b.reports) {
    all_hold = all_hold && rep.holds;
    if (rep.law == LawId::nlam) nlam_tight = rep.equality;
    if (rep.equality && has_equality_list(rep.law))
      equalities += " " + std::string(to_string(rep.law)) + (rep.r ? "(r=" + rep.r->to_string() + ")" : "");
  }
  std::cout << "lambda1 [" << format12(b.lambda.lo) << ", " << format12(b.lambda.hi) << "]\n"
            << "NLAM equality " << (nlam_tight ? "confirmed" : "NOT confirmed") << "\n"
            << "equalities" << equalities << "\n";
  return cert.tau == d.t && nlam_tight && all_hold ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for tau-critical graphs"};
  app.require_subcommand(1);

  double tol = kDefaultTolerance;
  try {
    tol = default_tolerance();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string record;
  std::vector<std::string> r_items;
  auto* check = app.add_subcommand("check", "Certify one graph6 record and run every law on it");
  check->add_option("graph6", record, "graph6 record")->required();
  check->add_option("--r", r_items, "r values (comma separated; integers and halves such as 1/2 or 2.5)")
      ->delimiter(',');
  check->add_option("--tol", tol, "enclosure width for spectral radii (default $TAUCRIT_TOL or 1e-9)")
      ->check(CLI::PositiveNumber);

  int order = 0;
  bool critical_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List graphs of one order up to isomorphism as graph6");
  enumerate->add_option("--n", order, "order, at most 7")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--critical", critical_only, "only tau-critical graphs");

  SweepConfig cfg;
  cfg.tol = tol;
  std::vector<std::string> law_items;
  std::string format = "json";
  std::string out_path;
  std::string corpus;
  auto* sweep = app.add_subcommand("sweep", "Verify every law on every tau-critical graph up to --max-n");
  sweep->add_option("--max-n", cfg.n_max, "largest order")->required();
  sweep->add_option("--corpus", corpus, "graph6 file to sweep instead of native enumeration");
  sweep->add_option("--r", r_items, "r values (default: 0..t, and 1/2,3/2,5/2 for HALF)")->delimiter(',');
  sweep->add_option("--laws", law_items, "law ids, or all / Q1 / SANDWICH")->delimiter(',');
  sweep->add_option("--out", out_path, "output file (default stdout)");
  sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--tol", cfg.tol, "enclosure width for spectral radii")->check(CLI::PositiveNumber);
  sweep->add_option("--suranyi-cap", cfg.suranyi_cap, "largest order for the independent-set sweep");
  sweep->add_flag("--inject-fault", cfg.inject_fault, "test mode: decrement every right-hand side")
      ->group("");

  std::string kind;
  std::optional<int> s_param;
  int t_param = 0;
  auto* family = app.add_subcommand("family", "Build an extremal family member and confirm its equality");
  family->add_option("--kind", kind, "all-matching, k-matching or c-matching")
      ->required()
      ->check(CLI::IsMember({"all-matching", "k-matching", "c-matching"}));
  family->add_option("--s", s_param, "transversal number of the non-K2 component");
  family->add_option("--t", t_param, "total transversal number")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(record, r_items, tol);
    if (*enumerate) return cmd_enumerate(order, critical_only);
    if (*sweep) {
      if (!corpus.empty()) cfg.corpus_path = corpus;
      return cmd_sweep(cfg, r_items, law_items, format, out_path);
    }
    if (*family) return cmd_family(kind, s_param, t_param);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
