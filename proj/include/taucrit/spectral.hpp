#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "taucrit/graph.hpp"

namespace taucrit {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr long kDefaultIterationCap = 1'000'000;

/// Default tolerance, overridable through TAUCRIT_TOL.
inline double default_tolerance() {
  if (const char* env = std::getenv("TAUCRIT_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && value > 0 && std::isfinite(value)) return value;
    throw std::invalid_argument(std::string("TAUCRIT_TOL is not a positive number: ") + env);
  }
  return kDefaultTolerance;
}

enum class MatrixKind { adjacency, signless_laplacian };

inline const char* to_string(MatrixKind kind) {
  return kind == MatrixKind::adjacency ? "adjacency" : "signless-laplacian";
}

/// Certified enclosure lo <= largest eigenvalue <= hi.
struct SpectralInterval {
  double lo = 0;
  double hi = 0;
  MatrixKind kind = MatrixKind::adjacency;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x, double slack = 0) const { return lo - slack <= x && x <= hi + slack; }
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PowerIterationOptions {
  double tol = kDefaultTolerance;
  long max_iterations = kDefaultIterationCap;
  /// If set, receives the running enclosure after every iteration.
  std::vector<SpectralInterval>* trace = nullptr;
};

namespace detail {

// Perron root of A (or D + A) of a connected graph.
//
// Iterates x <- (M + I) x from a positive start. The shift makes M + I
// primitive, so bipartite components converge too. Bounds:
//   lo = Rayleigh quotient x'Mx / x'x   (Courant-Fischer)
//   lo = min_i (Mx)_i / x_i             (Collatz-Wielandt, x > 0)
//   hi = max_i (Mx)_i / x_i             (Collatz-Wielandt, x > 0)
// The running max of the lower bounds and min of the upper bounds are kept,
// each widened outward by a bound on the floating-point rounding error.
inline SpectralInterval perron_root(const Graph& g, MatrixKind kind, const PowerIterationOptions& opts) {
  const int n = g.order();
  SpectralInterval best{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), kind};
  if (n == 1) {
    best.lo = best.hi = 0;
    if (opts.trace) opts.trace->push_back(best);
    return best;
  }

  std::vector<double> diag(n, 0.0);
  if (kind == MatrixKind::signless_laplacian)
    for (int v = 0; v < n; ++v) diag[v] = g.degree(v);

  std::vector<double> x(n), y(n);
  for (int v = 0; v < n; ++v) x[v] = 1.0 + v * 0x1p-20;

  for (long it = 0; it < opts.max_iterations; ++it) {
    double xx = 0, xy = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = 0;
    for (int v = 0; v < n; ++v) {
      double s = diag[v] * x[v];
      for_each_vertex(g.neighbors(v), [&](int u) { s += x[u]; });
      y[v] = s;
      xx += x[v] * x[v];
      xy += x[v] * s;
      const double ratio = s / x[v];
      min_ratio = std::min(min_ratio, ratio);
      max_ratio = std::max(max_ratio, ratio);
    }
    // Outward rounding: sums of at most 2n positive terms, then one division.
    const double slack = 2 * (2 * n + 4) * DBL_EPSILON * std::max(1.0, max_ratio);
    best.lo = std::max({best.lo, xy / xx - slack, min_ratio - slack});
    best.hi = std::min(best.hi, max_ratio + slack);
    if (opts.trace) opts.trace->push_back(best);
    if (best.hi - best.lo <= opts.tol) return best;

    double norm = 0;
    for (int v = 0; v < n; ++v) {
      x[v] = y[v] + x[v];
      norm = std::max(norm, x[v]);
    }
    for (double& xv : x) xv /= norm;
  }
  throw ConvergenceError("power iteration did not reach tolerance within " + std::to_string(opts.max_iterations) +
                         " iterations");
}

inline SpectralInterval largest_eigenvalue(const Graph& g, MatrixKind kind, const PowerIterationOptions& opts) {
  if (g.order() < 1) throw std::invalid_argument("spectral radius of the empty graph");
  if (!(opts.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  SpectralInterval out{0, 0, kind};
  for (const Component& c : components(g).parts) {
    const SpectralInterval part = perron_root(c.graph, kind, opts);
    out.lo = std::max(out.lo, part.lo);
    out.hi = std::max(out.hi, part.hi);
  }
  return out;
}

}  // namespace detail

/// Largest adjacency eigenvalue, enclosed to width <= opts.tol.
inline SpectralInterval lambda1(const Graph& g, const PowerIterationOptions& opts) {
  return detail::largest_eigenvalue(g, MatrixKind::adjacency, opts);
}

inline SpectralInterval lambda1(const Graph& g, double tol = kDefaultTolerance) {
  return lambda1(g, PowerIterationOptions{tol});
}

/// Largest eigenvalue of the signless Laplacian D + A.
inline SpectralInterval q1(const Graph& g, const PowerIterationOptions& opts) {
  return detail::largest_eigenvalue(g, MatrixKind::signless_laplacian, opts);
}

inline SpectralInterval q1(const Graph& g, double tol = kDefaultTolerance) { return q1(g, PowerIterationOptions{tol}); }

}  // namespace taucrit
