#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include "support.hpp"

using namespace taucrit;

namespace {

SweepConfig small_sweep(int n_max = 5) {
  SweepConfig cfg;
  cfg.n_max = n_max;
  return cfg;
}

}  // namespace

TEST(SweepTest, CleanAtSmallOrder) {
  const SweepOutcome out = run_sweep(small_sweep());
  EXPECT_EQ(out.exit_code, 0);
  const json& s = out.report["summary"];
  EXPECT_EQ(s["critical_graphs"], 7);  // K2, K3, K4, 2K2, K5, C5, K3+K2
  EXPECT_EQ(s["violations"], 0);
  EXPECT_EQ(s["anomalies"], 0);
  EXPECT_TRUE(s["census_ok"].get<bool>());
  EXPECT_TRUE(validate_sweep_report(out.report).empty());
}

TEST(SweepTest, FaultInjectionFails) {
  SweepConfig cfg = small_sweep(4);
  cfg.inject_fault = true;
  const SweepOutcome out = run_sweep(cfg);
  EXPECT_EQ(out.exit_code, 1);
  ASSERT_FALSE(out.report["violations"].empty());
  const json& v = out.report["violations"][0];
  EXPECT_FALSE(v["graph6"].get<std::string>().empty());
  EXPECT_FALSE(v["detail"].get<std::string>().empty());
  EXPECT_NE(out.report["header"].get<std::string>().find("FAILED"), std::string::npos);
}

TEST(SweepTest, DeterministicAcrossJobs) {
  SweepConfig a = small_sweep(6);
  SweepConfig b = a;
  b.jobs = 4;
  EXPECT_EQ(render(run_sweep(a), ReportFormat::json), render(run_sweep(b), ReportFormat::json));
}

TEST(SweepTest, CsvProjection) {
  const SweepOutcome out = run_sweep(small_sweep(3));
  const std::string csv = render(out, ReportFormat::csv);
  EXPECT_EQ(csv.rfind(csv_header(), 0), 0U);
  const long rows = std::count(csv.begin(), csv.end(), '\n') - 1;
  EXPECT_EQ(rows, out.report["summary"]["checks"].get<long>());
}

TEST(SweepTest, ExplicitParametersAndLaws) {
  SweepConfig cfg = small_sweep(5);
  cfg.laws = {LawId::rvpe, LawId::half};
  cfg.r_values = {Rational(2), Rational(3, 2)};
  const SweepOutcome out = run_sweep(cfg);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_GT(out.report["summary"]["skipped"].get<int>(), 0);  // r = 2 > t on K2, K3
  for (const json& entry : out.report["census"]) EXPECT_TRUE(entry["ok"].get<bool>()) << entry.dump();
}

TEST(SweepTest, CorpusMode) {
  const std::string path = ::testing::TempDir() + "taucrit_corpus.g6";
  {
    std::ofstream out(path);
    out << "C~\nDhc\nC^\n";  // K4, C5, a non-critical graph
  }
  SweepConfig cfg;
  cfg.n_max = 12;
  cfg.corpus_path = path;
  const SweepOutcome out = run_sweep(cfg);
  EXPECT_EQ(out.exit_code, 0) << out.report["census"].dump();
  EXPECT_EQ(out.report["summary"]["graphs_scanned"], 3);
  EXPECT_EQ(out.report["summary"]["critical_graphs"], 2);
  EXPECT_EQ(out.report["corpus"]["sha256"].get<std::string>().size(), 64U);
  std::remove(path.c_str());
}

TEST(SweepTest, ConfigValidation) {
  SweepConfig cfg;
  cfg.n_max = 8;
  EXPECT_THROW(run_sweep(cfg), EnumerationCapExceeded);
  cfg.n_max = 1;
  EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
  cfg = SweepConfig{};
  cfg.tol = 0;
  EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
}

TEST(ReportTest, HashAndRounding) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(format12(0.1 + 0.2), "0.3");
  EXPECT_EQ(format12(-0.0), "0");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("x\"y"), "\"x\"\"y\"");
}

TEST(ReportTest, SchemaCatchesProblems) {
  json doc = run_sweep(small_sweep(3)).report;
  doc["summary"].erase("checks");
  doc["graphs"][0]["laws"][0]["holds"] = "yes";
  const auto problems = validate_sweep_report(doc);
  EXPECT_GE(problems.size(), 2U);
}

// ---------------------------------------------------------------------------
// Command line.

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(TAUCRIT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(cmd.c_str(), "r"), ::pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
  const int raw = ::pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

long lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(CliTest, CheckCompleteGraph) {
  const CliRun r = run_cli("check C~");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_TRUE(validate_check_report(doc).empty());
  EXPECT_EQ(doc["certificate"]["tau"], 3);
  EXPECT_TRUE(doc["critical"].get<bool>());
  bool ehm_equality = false;
  for (const json& rep : doc["laws"])
    if (rep["law"] == "EHM") ehm_equality = rep["equality"].get<bool>();
  EXPECT_TRUE(ehm_equality);
  EXPECT_NEAR(doc["lambda1"]["lo"].get<double>(), 3, 1e-9);
  EXPECT_NEAR(doc["lambda1"]["hi"].get<double>(), 3, 1e-9);
}

TEST(CliTest, CheckCycleAtOne) {
  const CliRun r = run_cli("check " + to_graph6(cycle(5)) + " --r 1");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  bool spect_equality = false;
  for (const json& rep : doc["laws"])
    if (rep["law"] == "SPECT" && rep["r"] == "1") spect_equality = rep["equality"].get<bool>();
  EXPECT_TRUE(spect_equality);
}

TEST(CliTest, CheckNonCritical) {
  const CliRun r = run_cli("check " + to_graph6(cycle(4)));
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["critical"].get<bool>());
  EXPECT_TRUE(doc["laws"].empty());
}

TEST(CliTest, CheckErrors) {
  EXPECT_EQ(run_cli("check C").status, 2);
  EXPECT_EQ(run_cli("check C~ --r 4").status, 2);
  EXPECT_EQ(run_cli("check C~ --r x").status, 2);
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("bogus").status, 2);
}

TEST(CliTest, Enumerate) {
  const CliRun three = run_cli("enumerate --n 3 --critical");
  EXPECT_EQ(three.status, 0);
  EXPECT_EQ(three.out, "Bw\n");
  EXPECT_EQ(run_cli("enumerate --n 2 --critical").out, "A_\n");
  const CliRun four = run_cli("enumerate --n 4");
  EXPECT_EQ(four.status, 0);
  EXPECT_EQ(lines(four.out), 11);
  EXPECT_EQ(run_cli("enumerate --n 8").status, 2);
}

TEST(CliTest, Family) {
  const CliRun c = run_cli("family --kind c-matching --s 4 --t 5");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), to_graph6(disjoint_union(cycle(7), complete(2))));
  EXPECT_NE(c.out.find("NLAM equality confirmed"), std::string::npos);

  const CliRun m = run_cli("family --kind all-matching --t 2");
  EXPECT_EQ(m.status, 0);
  EXPECT_NE(m.out.find(" GL"), std::string::npos);

  EXPECT_EQ(run_cli("family --kind k-matching --s 1 --t 3").status, 2);
  EXPECT_EQ(run_cli("family --kind k-matching --t 3").status, 2);
}

TEST(CliTest, SweepExitCodes) {
  EXPECT_EQ(run_cli("sweep --max-n 5").status, 0);
  const CliRun faulty = run_cli("sweep --max-n 4 --inject-fault");
  EXPECT_EQ(faulty.status, 1);
  EXPECT_FALSE(json::parse(faulty.out)["violations"].empty());
  EXPECT_EQ(run_cli("sweep --max-n 9").status, 2);
  EXPECT_EQ(run_cli("sweep --max-n 5 --laws NOPE").status, 2);
  const CliRun csv = run_cli("sweep --max-n 4 --format csv --laws EHM,gl");
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.rfind("graph6,law", 0), 0U);
}
