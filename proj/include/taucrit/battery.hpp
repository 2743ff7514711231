#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taucrit/laws.hpp"
#include "taucrit/rational.hpp"
#include "taucrit/spectral.hpp"

namespace taucrit {

/// Which laws to run and at which r.
struct LawPlan {
  std::vector<LawId> laws{kAllLaws.begin(), kAllLaws.end()};
  /// Empty: r = 0..t for integer-r laws and r in {1/2, 3/2, 5/2} for HALF.
  std::vector<Rational> r_values;
  /// Throw std::domain_error on an integer r > t instead of skipping it.
  bool strict_domain = false;
  LawOptions options;

  bool includes(LawId id) const { return std::find(laws.begin(), laws.end(), id) != laws.end(); }

  std::vector<Rational> half_values() const {
    if (r_values.empty()) return {Rational(1, 2), Rational(3, 2), Rational(5, 2)};
    return r_values;
  }
};

struct Battery {
  SpectralInterval lambda;
  SpectralInterval q;
  std::vector<LawReport> sandwich;
  std::vector<LawReport> reports;
  std::vector<std::string> skipped;
};

/// Runs every planned law on a tau-critical graph, in the order of plan.laws
/// and, within a law, increasing r.
inline Battery run_battery(const Graph& g, const TauCertificate& cert, const LawPlan& plan) {
  detail::require_critical(cert, LawId::ehm);
  const LawOptions& opts = plan.options;
  Battery out;
  out.lambda = lambda1(g, PowerIterationOptions{opts.tol});
  out.q = q1(g, PowerIterationOptions{opts.tol});

  std::vector<int> integer_rs;
  if (plan.r_values.empty()) {
    for (int r = 0; r <= cert.tau; ++r) integer_rs.push_back(r);
  } else {
    for (const Rational& r : plan.r_values) {
      if (!r.is_integer()) continue;
      if (r.num() < 0 || r.num() > cert.tau) {
        if (plan.strict_domain)
          throw std::domain_error("r=" + r.to_string() + " outside 0..t for t=" + std::to_string(cert.tau));
        out.skipped.push_back("integer-r laws at r=" + r.to_string() + ": r > t");
        continue;
      }
      integer_rs.push_back(static_cast<int>(r.num()));
    }
    std::sort(integer_rs.begin(), integer_rs.end());
    integer_rs.erase(std::unique(integer_rs.begin(), integer_rs.end()), integer_rs.end());
  }

  auto push = [&](LawReport rep) { out.reports.push_back(std::move(rep)); };
  for (LawId law : plan.laws) {
    switch (law) {
      case LawId::ehm: push(check_ehm(g, cert, opts)); break;
      case LawId::gl: push(check_gl(g, cert, opts)); break;
      case LawId::rvpe:
        for (int r : integer_rs) push(check_rvpe(g, cert, r, opts));
        break;
      case LawId::hajnal: push(check_hajnal(g, cert, opts)); break;
      case LawId::suranyi:
        if (g.order() > opts.suranyi_cap)
          out.skipped.push_back("SURANYI: order " + std::to_string(g.order()) + " above cap " +
                                std::to_string(opts.suranyi_cap));
        else
          push(check_suranyi(g, cert, opts));
        break;
      case LawId::lemma23: push(check_lemma23(g, cert, opts)); break;
      case LawId::sandwich_lower:
      case LawId::sandwich_upper: {
        SandwichReport s = check_sandwich(g, out.lambda, opts);
        LawReport& rep = law == LawId::sandwich_lower ? s.lower : s.upper;
        rep.t = cert.tau;
        out.sandwich.push_back(rep);
        push(rep);
        break;
      }
      case LawId::nlam: push(check_nlam(g, cert, out.lambda, opts)); break;
      case LawId::lam1: push(check_lam1(g, cert, out.lambda, opts)); break;
      case LawId::spect:
        for (int r : integer_rs) push(check_spect(g, cert, out.lambda, r, opts));
        break;
      case LawId::half:
        for (const Rational& r : plan.half_values()) push(check_half(g, cert, out.lambda, r, opts));
        break;
      case LawId::q1_nlam:
      case LawId::q1_lam1:
      case LawId::q1_spect: {
        const int index = law == LawId::q1_nlam ? 0 : law == LawId::q1_lam1 ? 1 : 2;
        if (index < 2) {
          push(check_q1(g, cert, out.q, 0, opts)[index]);
        } else {
          for (int r : integer_rs) push(check_q1(g, cert, out.q, r, opts)[2]);
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace taucrit
