#include <gtest/gtest.h>

#include "support.hpp"

using namespace taucrit;
using testing_support::family_graph;

namespace {

struct Case {
  Graph g;
  TauCertificate cert;
  SpectralInterval lambda;
  SpectralInterval q;

  explicit Case(Graph graph)
      : g(std::move(graph)), cert(certify_tau_critical(g)), lambda(lambda1(g)), q(q1(g)) {}
};

Case of(const std::string& family) { return Case(family_graph(family)); }

// A tau-critical graph on at most 7 vertices outside every extremal family.
Graph non_extremal_critical() {
  for (int n = 2; n <= 7; ++n)
    for (const CriticalGraph& c : enumerate_tau_critical(n))
      if (!match_family(c.graph)) return c.graph;
  ADD_FAILURE() << "no non-extremal tau-critical graph found";
  return complete(2);
}

double exact(const Value& v) {
  EXPECT_TRUE(v.is_exact());
  return v.exact ? v.exact->to_double() : -1;
}

}  // namespace

TEST(DegreeLawTest, Hajnal) {
  for (const char* name : {"K4", "3K2", "C5+1K2"}) {
    const Case c = of(name);
    const LawReport rep = check_hajnal(c.g, c.cert);
    EXPECT_TRUE(rep.holds) << name;
    EXPECT_TRUE(rep.equality) << name;
    EXPECT_EQ(exact(rep.slack), 0) << name;
  }
  const Case k4 = of("K4");
  EXPECT_EQ(exact(check_hajnal(k4.g, k4.cert).lhs), 3);
}

TEST(DegreeLawTest, Suranyi) {
  const Case k4 = of("K4");
  const LawReport a = check_suranyi(k4.g, k4.cert);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(exact(a.lhs), 3);
  EXPECT_EQ(exact(a.rhs), 3);

  const Case c5 = of("C5");
  const LawReport b = check_suranyi(c5.g, c5.cert);
  EXPECT_TRUE(b.holds);
  EXPECT_TRUE(b.equality);
  EXPECT_EQ(exact(b.lhs), 2);

  LawOptions tight;
  tight.suranyi_cap = 4;
  EXPECT_THROW(check_suranyi(c5.g, c5.cert, tight), SuranyiCapExceeded);
}

TEST(DegreeLawTest, RequiresCriticalGraph) {
  const Graph c4 = cycle(4);
  const TauCertificate cert = certify_tau_critical(c4);
  EXPECT_THROW(check_hajnal(c4, cert), LawPreconditionError);
  EXPECT_THROW(check_ehm(c4, cert), LawPreconditionError);
  EXPECT_THROW(check_nlam(c4, cert, lambda1(c4)), LawPreconditionError);
}

TEST(LawTest, EdgeBound) {
  const Case k5 = of("K5");
  const LawReport a = check_ehm(k5.g, k5.cert);
  EXPECT_EQ(exact(a.lhs), 10);
  EXPECT_EQ(exact(a.rhs), 10);
  EXPECT_TRUE(a.equality);
  ASSERT_TRUE(a.family.has_value());
  EXPECT_EQ(a.family->to_string(), "K5");

  const Case c5 = of("C5");
  const LawReport b = check_ehm(c5.g, c5.cert);
  EXPECT_EQ(exact(b.lhs), 5);
  EXPECT_EQ(exact(b.rhs), 6);
  EXPECT_FALSE(b.equality);
  EXPECT_EQ(exact(b.slack), 1);

  const Case m3 = of("3K2");
  EXPECT_EQ(exact(check_ehm(m3.g, m3.cert).slack), 3);
}

TEST(LawTest, OrderSizeBound) {
  const Case c5 = of("C5");
  const LawReport a = check_gl(c5.g, c5.cert);
  EXPECT_EQ(exact(a.lhs), 10);
  EXPECT_TRUE(a.equality);

  const Case m2 = of("2K2");
  const LawReport b = check_gl(m2.g, m2.cert);
  EXPECT_EQ(exact(b.lhs), 6);
  EXPECT_TRUE(b.equality);

  const Case k3k2 = of("K3+1K2");
  const LawReport c = check_gl(k3k2.g, k3k2.cert);
  EXPECT_EQ(exact(c.lhs), 9);
  EXPECT_EQ(exact(c.rhs), 10);
  EXPECT_FALSE(c.equality);
}

TEST(LawTest, WeightedOrderSizeBound) {
  const Case c5 = of("C5");
  const LawReport a = check_rvpe(c5.g, c5.cert, 2);
  EXPECT_EQ(exact(a.lhs), 15);
  EXPECT_EQ(exact(a.rhs), 15);
  EXPECT_TRUE(a.equality);

  const Case k4 = of("K4");
  EXPECT_TRUE(check_rvpe(k4.g, k4.cert, 0).equality);

  const Case c5k2 = of("C5+1K2");
  const LawReport c = check_rvpe(c5k2.g, c5k2.cert, 1);
  EXPECT_EQ(exact(c.lhs), 13);
  EXPECT_EQ(exact(c.rhs), 15);
  EXPECT_FALSE(c.equality);

  EXPECT_THROW(check_rvpe(k4.g, k4.cert, 4), std::domain_error);
  EXPECT_THROW(check_rvpe(k4.g, k4.cert, -1), std::domain_error);
}

TEST(LawTest, OrderSpectralBound) {
  const Case m3 = of("3K2");
  const LawReport a = check_nlam(m3.g, m3.cert, m3.lambda);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.equality);
  EXPECT_NEAR(a.lhs.mid(), 7, 1e-9);
  EXPECT_EQ(a.family->kind, FamilyKind::all_matching);

  const Case k3k2 = of("K3+1K2");
  const LawReport b = check_nlam(k3k2.g, k3k2.cert, k3k2.lambda);
  EXPECT_TRUE(b.equality);
  EXPECT_EQ(b.family->kind, FamilyKind::complete_plus_matching);
  EXPECT_EQ(b.family->s, 2);

  // Not an extremal graph: strict.
  const Case other(non_extremal_critical());
  const LawReport c = check_nlam(other.g, other.cert, other.lambda);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.equality);
  EXPECT_GT(c.slack.lo, 1e-6);
}

TEST(LawTest, SpectralRadiusBound) {
  const Case k6 = of("K6");
  const LawReport a = check_lam1(k6.g, k6.cert, k6.lambda);
  EXPECT_TRUE(a.equality);
  EXPECT_NEAR(a.lhs.mid(), 5, 1e-9);

  const Case c5 = of("C5");
  const LawReport b = check_lam1(c5.g, c5.cert, c5.lambda);
  EXPECT_FALSE(b.equality);
  EXPECT_NEAR(b.slack.mid(), 1, 1e-9);

  const Case c7k2 = of("C7+1K2");
  const LawReport c = check_lam1(c7k2.g, c7k2.cert, c7k2.lambda);
  EXPECT_FALSE(c.equality);
  EXPECT_NEAR(c.slack.mid(), 3, 1e-9);
}

TEST(LawTest, WeightedSpectralBound) {
  const Case c5 = of("C5");
  const LawReport a = check_spect(c5.g, c5.cert, c5.lambda, 1);
  EXPECT_TRUE(a.equality);
  EXPECT_NEAR(a.lhs.mid(), 10, 1e-8);

  const Case k4k2 = of("K4+1K2");
  const LawReport b = check_spect(k4k2.g, k4k2.cert, k4k2.lambda, 1);
  EXPECT_TRUE(b.equality);
  EXPECT_NEAR(b.lhs.mid(), 15, 1e-8);

  const Case k4 = of("K4");
  const LawReport c = check_spect(k4.g, k4.cert, k4.lambda, 2);
  EXPECT_FALSE(c.equality);
  EXPECT_NEAR(c.lhs.mid(), 14, 1e-8);
  EXPECT_EQ(exact(c.rhs), 15);

  EXPECT_THROW(check_spect(k4.g, k4.cert, k4.lambda, 4), std::domain_error);
}

TEST(LawTest, RealWeightedBound) {
  const Case k4 = of("K4");
  const LawReport a = check_half(k4.g, k4.cert, k4.lambda, Rational(1, 2));
  EXPECT_TRUE(a.equality);
  EXPECT_NEAR(a.lhs.mid(), 8, 1e-8);
  EXPECT_EQ(exact(a.rhs), 8);
  EXPECT_TRUE(a.notes.empty());

  const Case c5 = of("C5");
  const LawReport b = check_half(c5.g, c5.cert, c5.lambda, Rational(3, 2));
  EXPECT_TRUE(b.equality);
  EXPECT_NEAR(b.lhs.mid(), 12.5, 1e-8);
  EXPECT_EQ(exact(b.rhs), 12.5);
  EXPECT_EQ(b.notes, std::vector<std::string>{"half-integral-matching-count"});

  const LawReport c = check_half(k4.g, k4.cert, k4.lambda, 1);
  EXPECT_FALSE(c.equality);
  EXPECT_NEAR(c.lhs.mid(), 10, 1e-8);
  EXPECT_EQ(*c.rhs.exact, Rational(81, 8));

  EXPECT_THROW(check_half(k4.g, k4.cert, k4.lambda, -1), std::domain_error);
}

TEST(LawTest, SignlessLaplacianBounds) {
  const Case k4 = of("K4");
  const auto a = check_q1(k4.g, k4.cert, k4.q, 0);
  EXPECT_TRUE(a[1].equality);
  EXPECT_NEAR(a[1].lhs.mid(), 6, 1e-9);

  const Case m3 = of("3K2");
  const auto b = check_q1(m3.g, m3.cert, m3.q, 0);
  EXPECT_TRUE(b[0].equality);
  EXPECT_NEAR(b[0].lhs.mid(), 7, 1e-9);

  const Case c5 = of("C5");
  const auto c = check_q1(c5.g, c5.cert, c5.q, 1);
  EXPECT_TRUE(c[2].equality);
  EXPECT_NEAR(c[2].lhs.mid(), 10, 1e-8);
  for (const LawReport& rep : c) EXPECT_TRUE(rep.holds);
}

TEST(LawTest, RegularComponentForcesFamily) {
  const Case c5k2 = of("C5+1K2");
  const LawReport a = check_lemma23(c5k2.g, c5k2.cert);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.equality);
  EXPECT_EQ(a.family->to_string(), "C5+1K2");

  const Case k4 = of("K4");
  const LawReport b = check_lemma23(k4.g, k4.cert);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.family->kind, FamilyKind::complete_plus_matching);
  EXPECT_EQ(b.family->s, 3);

  // Critical but outside every family: the hypothesis never fires.
  const Case other(non_extremal_critical());
  const LawReport c = check_lemma23(other.g, other.cert);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.notes, std::vector<std::string>{"vacuous"});
}

TEST(LawTest, Sandwich) {
  const Graph c5 = cycle(5);
  const SandwichReport a = check_sandwich(c5, lambda1(c5));
  EXPECT_TRUE(a.lower.equality);
  EXPECT_TRUE(a.upper.equality);

  const Graph k3k2 = family_graph("K3+1K2");
  const SandwichReport b = check_sandwich(k3k2, lambda1(k3k2));
  EXPECT_FALSE(b.lower.equality);
  EXPECT_TRUE(b.upper.equality);

  const Graph p3 = path(3);
  const SandwichReport c = check_sandwich(p3, lambda1(p3));
  EXPECT_TRUE(c.lower.holds);
  EXPECT_TRUE(c.upper.holds);
  EXPECT_FALSE(c.lower.equality);
  EXPECT_FALSE(c.upper.equality);
  EXPECT_EQ(*c.lower.lhs.exact, Rational(4, 3));

  EXPECT_THROW(check_sandwich(Graph(0), SpectralInterval{0, 0, MatrixKind::adjacency}), LawPreconditionError);
}

TEST(LawTest, FaultInjectionProducesEvidence) {
  LawOptions faulty;
  faulty.rhs_shift = 1;
  const Case k4 = of("K4");
  const LawReport a = check_ehm(k4.g, k4.cert, faulty);
  EXPECT_FALSE(a.holds);
  ASSERT_TRUE(a.evidence.has_value());
  EXPECT_EQ(a.evidence->graph6, "C~");

  const LawReport b = check_nlam(k4.g, k4.cert, k4.lambda, faulty);
  EXPECT_FALSE(b.holds);
  EXPECT_FALSE(b.equality);
  EXPECT_TRUE(b.evidence.has_value());
}

TEST(LawTest, WideIntervalRejected) {
  const Case k4 = of("K4");
  const SpectralInterval wide{2.5, 3.5, MatrixKind::adjacency};
  EXPECT_THROW(check_nlam(k4.g, k4.cert, wide), LawPreconditionError);
}

TEST(BatteryTest, AutomaticParameters) {
  const Case c5 = of("C5");
  const Battery b = run_battery(c5.g, c5.cert, LawPlan{});
  int rvpe = 0, half = 0;
  for (const LawReport& rep : b.reports) {
    EXPECT_TRUE(rep.holds) << to_string(rep.law);
    rvpe += rep.law == LawId::rvpe;
    half += rep.law == LawId::half;
  }
  EXPECT_EQ(rvpe, 4);  // r = 0..3
  EXPECT_EQ(half, 3);
  EXPECT_EQ(b.sandwich.size(), 2U);
}

TEST(BatteryTest, ExplicitParameters) {
  const Case k3 = of("K3");
  LawPlan plan;
  plan.r_values = {0, 1, 5};
  const Battery b = run_battery(k3.g, k3.cert, plan);
  EXPECT_EQ(b.skipped.size(), 1U);
  plan.strict_domain = true;
  EXPECT_THROW(run_battery(k3.g, k3.cert, plan), std::domain_error);
}
