#pragma once

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taucrit/cover.hpp"
#include "taucrit/family.hpp"
#include "taucrit/graph.hpp"
#include "taucrit/graph6.hpp"
#include "taucrit/law_id.hpp"
#include "taucrit/rational.hpp"
#include "taucrit/spectral.hpp"

namespace taucrit {

/// One side of an inequality: exact when purely combinatorial, otherwise an
/// enclosure [lo, hi] derived from a certified spectral interval.
struct Value {
  double lo = 0;
  double hi = 0;
  std::optional<Rational> exact;

  static Value of(const Rational& q) { return {q.to_double(), q.to_double(), q}; }
  static Value enclosure(double lo, double hi) { return {lo, hi, std::nullopt}; }

  bool is_exact() const { return exact.has_value(); }
  double mid() const { return 0.5 * (lo + hi); }
};

/// a - b, exact when both are exact.
inline Value operator-(const Value& a, const Value& b) {
  if (a.exact && b.exact) return Value::of(*a.exact - *b.exact);
  return Value::enclosure(a.lo - b.hi, a.hi - b.lo);
}

struct Evidence {
  std::string graph6;
  std::string detail;
};

/// Outcome of checking one inequality on one graph.
///
/// holds: lhs <= rhs (for enclosures, lhs.hi <= rhs + propagated tolerance).
/// equality: decided structurally, never from floating point.
/// evidence: present iff !holds.
struct LawReport {
  LawId law = LawId::ehm;
  std::optional<Rational> r;
  int n = 0;
  int m = 0;
  int t = 0;
  bool holds = true;
  Value lhs;
  Value rhs;
  Value slack;
  bool equality = false;
  std::optional<FamilyDescriptor> family;
  std::optional<Evidence> evidence;
  std::vector<std::string> notes;
};

struct LawOptions {
  double tol = kDefaultTolerance;
  /// Subtracted from every right-hand side. Nonzero only for fault injection.
  std::int64_t rhs_shift = 0;
  /// Largest order on which independent sets are enumerated.
  int suranyi_cap = 14;
};

class LawPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_critical(const TauCertificate& cert, LawId law) {
  if (!cert.critical)
    throw LawPreconditionError(std::string(to_string(law)) + " applies only to tau-critical graphs");
}

inline LawReport report_skeleton(LawId law, const Graph& g, const TauCertificate& cert, std::optional<Rational> r) {
  LawReport rep;
  rep.law = law;
  rep.r = r;
  rep.n = g.order();
  rep.m = g.size();
  rep.t = cert.tau;
  rep.family = match_family(g);
  return rep;
}

inline void finish(LawReport& rep, const Graph& g, const std::string& violation) {
  rep.slack = rep.rhs - rep.lhs;
  if (!rep.holds) rep.evidence = Evidence{to_graph6(g), violation};
}

// Integer inequality lhs <= rhs; equality is exact integer equality.
inline LawReport integer_law(LawId law, const Graph& g, const TauCertificate& cert, std::optional<Rational> r,
                             std::int64_t lhs, std::int64_t rhs, const LawOptions& opts) {
  LawReport rep = report_skeleton(law, g, cert, r);
  rhs -= opts.rhs_shift;
  rep.lhs = Value::of(lhs);
  rep.rhs = Value::of(rhs);
  rep.holds = lhs <= rhs;
  rep.equality = lhs == rhs;
  finish(rep, g, std::to_string(lhs) + " > " + std::to_string(rhs));
  return rep;
}

// exact_part + coef * x <= rhs with x enclosed by `x`; the enclosure may
// exceed the true value by coef * tol, plus rounding.
inline LawReport spectral_law(LawId law, const Graph& g, const TauCertificate& cert, std::optional<Rational> r,
                              const Rational& exact_part, const Rational& coef, const SpectralInterval& x,
                              Rational rhs, bool structural_equality, const LawOptions& opts) {
  if (x.width() > opts.tol * (1 + 1e-9))
    throw LawPreconditionError("spectral interval of width " + std::to_string(x.width()) +
                               " is wider than the tolerance");
  LawReport rep = report_skeleton(law, g, cert, r);
  rhs = rhs - Rational(opts.rhs_shift);
  const double c = coef.to_double();
  const double base = exact_part.to_double();
  rep.lhs = Value::enclosure(base + c * x.lo, base + c * x.hi);
  rep.rhs = Value::of(rhs);
  const double rhs_d = rhs.to_double();
  const double allowance = c * opts.tol + 64 * DBL_EPSILON * std::max(1.0, std::abs(rhs_d));
  rep.holds = rep.lhs.hi <= rhs_d + allowance;
  rep.equality = rep.holds && structural_equality;
  finish(rep, g, "lhs enclosure [" + std::to_string(rep.lhs.lo) + ", " + std::to_string(rep.lhs.hi) + "] exceeds " +
                     rhs.to_string());
  return rep;
}

inline void require_integer_r(LawId law, const TauCertificate& cert, int r) {
  if (r < 0 || r > cert.tau)
    throw std::domain_error(std::string(to_string(law)) + " needs 0 <= r <= t, got r=" + std::to_string(r) +
                            " t=" + std::to_string(cert.tau));
}

}  // namespace detail

}  // namespace taucrit
