#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "taucrit/degree_laws.hpp"
#include "taucrit/law_report.hpp"

namespace taucrit {

// Structural equality predicates. None of them looks at a floating-point value.

/// n + lambda1 = 2t + 1: G is one of tK2, K_{s+1} + (t-s)K2, C_{2s-1} + (t-s)K2
/// and carries a (2t+1-n)-regular component.
inline bool attains_order_spectral_bound(const Graph& g, const TauCertificate& cert) {
  const std::optional<FamilyDescriptor> family = match_family(g);
  return family && family->t == cert.tau && has_regular_component(g, 2 * cert.tau + 1 - g.order()).has_value();
}

/// lambda1 = t: the order-spectral bound is tight and n = t + 1.
inline bool attains_spectral_radius_bound(const Graph& g, const TauCertificate& cert) {
  return attains_order_spectral_bound(g, cert) && g.order() == cert.tau + 1;
}

/// n (r + lambda1/2) = C(t+r+1, 2): tight order-spectral bound and
/// n in {t + r, t + r + 1}, the two maximizers of n(2t + 2r + 1 - n) / 2.
inline bool attains_weighted_spectral_bound(const Graph& g, const TauCertificate& cert, int r) {
  const int n = g.order();
  return attains_order_spectral_bound(g, cert) && (n == cert.tau + r || n == cert.tau + r + 1);
}

/// n (r + lambda1/2) = (2t+2r+1)^2 / 8: tight order-spectral bound and 2n = 2t + 2r + 1.
inline bool attains_real_weighted_bound(const Graph& g, const TauCertificate& cert, const Rational& r) {
  return attains_order_spectral_bound(g, cert) &&
         Rational(2 * g.order()) == Rational(2 * cert.tau + 1) + Rational(2) * r;
}

/// m <= C(t+1, 2).
inline LawReport check_ehm(const Graph& g, const TauCertificate& cert, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::ehm);
  return detail::integer_law(LawId::ehm, g, cert, std::nullopt, g.size(), binomial(cert.tau + 1, 2), opts);
}

/// n + m <= C(t+2, 2).
inline LawReport check_gl(const Graph& g, const TauCertificate& cert, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::gl);
  return detail::integer_law(LawId::gl, g, cert, std::nullopt, g.order() + g.size(), binomial(cert.tau + 2, 2), opts);
}

/// r n + m <= C(t+r+1, 2) for integer 0 <= r <= t.
inline LawReport check_rvpe(const Graph& g, const TauCertificate& cert, int r, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::rvpe);
  detail::require_integer_r(LawId::rvpe, cert, r);
  return detail::integer_law(LawId::rvpe, g, cert, Rational(r), std::int64_t{r} * g.order() + g.size(),
                             binomial(cert.tau + r + 1, 2), opts);
}

/// n + lambda1 <= 2t + 1.
inline LawReport check_nlam(const Graph& g, const TauCertificate& cert, const SpectralInterval& lambda,
                            const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::nlam);
  return detail::spectral_law(LawId::nlam, g, cert, std::nullopt, g.order(), 1, lambda, 2 * cert.tau + 1,
                              attains_order_spectral_bound(g, cert), opts);
}

/// lambda1 <= t.
inline LawReport check_lam1(const Graph& g, const TauCertificate& cert, const SpectralInterval& lambda,
                            const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::lam1);
  return detail::spectral_law(LawId::lam1, g, cert, std::nullopt, 0, 1, lambda, cert.tau,
                              attains_spectral_radius_bound(g, cert), opts);
}

/// n (r + lambda1 / 2) <= C(t+r+1, 2) for integer 0 <= r <= t.
inline LawReport check_spect(const Graph& g, const TauCertificate& cert, const SpectralInterval& lambda, int r,
                             const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::spect);
  detail::require_integer_r(LawId::spect, cert, r);
  const int n = g.order();
  return detail::spectral_law(LawId::spect, g, cert, Rational(r), Rational(std::int64_t{n} * r), Rational(n, 2),
                              lambda, binomial(cert.tau + r + 1, 2), attains_weighted_spectral_bound(g, cert, r), opts);
}

/// n (r + lambda1 / 2) <= (2t + 2r + 1)^2 / 8 for real r >= 0. Equality is
/// possible only when 2r is odd.
inline LawReport check_half(const Graph& g, const TauCertificate& cert, const SpectralInterval& lambda,
                            const Rational& r, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::half);
  if (r < Rational(0)) throw std::domain_error("HALF needs r >= 0, got " + r.to_string());
  const int n = g.order();
  const Rational base = Rational(2 * cert.tau + 1) + Rational(2) * r;
  LawReport rep = detail::spectral_law(LawId::half, g, cert, r, Rational(n) * r, Rational(n, 2), lambda,
                                       base * base / Rational(8), attains_real_weighted_bound(g, cert, r), opts);
  if (rep.equality && r != Rational(1, 2)) rep.notes.push_back("half-integral-matching-count");
  return rep;
}

/// Signless-Laplacian versions: n + q1/2 <= 2t+1, q1 <= 2t, n (r + q1/4) <= C(t+r+1, 2).
inline std::array<LawReport, 3> check_q1(const Graph& g, const TauCertificate& cert, const SpectralInterval& q,
                                         int r, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::q1_nlam);
  detail::require_integer_r(LawId::q1_spect, cert, r);
  const int n = g.order();
  return {
      detail::spectral_law(LawId::q1_nlam, g, cert, std::nullopt, n, Rational(1, 2), q, 2 * cert.tau + 1,
                           attains_order_spectral_bound(g, cert), opts),
      detail::spectral_law(LawId::q1_lam1, g, cert, std::nullopt, 0, 1, q, 2 * cert.tau,
                           attains_spectral_radius_bound(g, cert), opts),
      detail::spectral_law(LawId::q1_spect, g, cert, Rational(r), Rational(std::int64_t{n} * r), Rational(n, 4), q,
                           binomial(cert.tau + r + 1, 2), attains_weighted_spectral_bound(g, cert, r), opts),
  };
}

/// A (2t+1-n)-regular component forces G into one of the three families with
/// matching t. Passes vacuously without such a component.
inline LawReport check_lemma23(const Graph& g, const TauCertificate& cert, const LawOptions& opts = {}) {
  detail::require_critical(cert, LawId::lemma23);
  (void)opts;
  LawReport rep = detail::report_skeleton(LawId::lemma23, g, cert, std::nullopt);
  const int d = 2 * cert.tau + 1 - g.order();
  const std::optional<VertexSet> part = has_regular_component(g, d);
  rep.lhs = Value::of(part ? 1 : 0);  // hypothesis present
  rep.rhs = Value::of(rep.family && rep.family->t == cert.tau ? 1 : 0);  // conclusion present
  rep.holds = !part || (rep.family && rep.family->t == cert.tau);
  rep.equality = part.has_value() && rep.holds;
  if (!part) rep.notes.push_back("vacuous");
  detail::finish(rep, g, "has a " + std::to_string(d) + "-regular component but matches no extremal family");
  return rep;
}

struct SandwichReport {
  LawReport lower;  // 2m/n <= lambda1, equality iff regular
  LawReport upper;  // lambda1 <= max degree, equality iff a max-degree-regular component exists
};

/// 2m/n <= lambda1 <= max degree, for any graph with n >= 1. Equality flags
/// are structural: lower iff regular, upper iff a max-degree-regular component.
/// The reports carry t = 0; callers holding a certificate may fill it in.
inline SandwichReport check_sandwich(const Graph& g, const SpectralInterval& lambda, const LawOptions& opts = {}) {
  if (g.order() < 1) throw LawPreconditionError("sandwich needs n >= 1");
  if (lambda.width() > opts.tol * (1 + 1e-9)) throw LawPreconditionError("spectral interval wider than tolerance");
  TauCertificate none;
  const int delta = max_degree(g);
  const double allowance = opts.tol + 64 * DBL_EPSILON * std::max(1, delta);

  LawReport lower = detail::report_skeleton(LawId::sandwich_lower, g, none, std::nullopt);
  const Rational average = Rational(2 * std::int64_t{g.size()}, g.order());
  lower.lhs = Value::of(average);
  lower.rhs = Value::enclosure(lambda.lo - opts.rhs_shift, lambda.hi - opts.rhs_shift);
  lower.holds = average.to_double() <= lower.rhs.hi + allowance;
  lower.equality = lower.holds && is_regular(g);
  detail::finish(lower, g, "2m/n = " + average.to_string() + " exceeds lambda1 enclosure");

  LawReport upper = detail::spectral_law(LawId::sandwich_upper, g, none, std::nullopt, 0, 1, lambda, delta,
                                         has_regular_component(g, delta).has_value(), opts);
  return {lower, upper};
}

}  // namespace taucrit
