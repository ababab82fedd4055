#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltspec/log_value.hpp"

namespace ltspec {

/// Nodes and weights of the n-point Gauss-Legendre rule on [0, 1].
/// Built once per order by Newton iteration and cached.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre_unit(int n);

/// Maximizer of a smooth log-integrand on [lo, hi]: coarse scan, golden
/// section, then parabolic polish so the result is good to ~1e-9 relative
/// even where the function is flat to rounding.
double find_log_peak(const std::function<double(double)>& log_f, double lo,
                     double hi, double hint = -1.0);

struct LogQuadratureOptions {
  double tol = 1e-12;       // target |delta log| of the result
  int max_panels = 200000;  // refinement budget
  double peak_hint = -1.0;  // caller's guess for the maximizer, < 0 if none
};

struct LogQuadrature {
  LogValue value;
  /// Estimated |delta log|, including the irreducible rounding floor of the
  /// log-integrand evaluations (which scales with the magnitude of the
  /// log-integrand, not with tol).
  double log_error = 0.0;
  long evaluations = 0;
  long panels = 0;
  /// Refinement reached tol or the evaluation-noise floor within budget;
  /// false only on budget exhaustion or a tail that could not be closed.
  bool converged = false;
};

/// Thrown when the panel budget is exhausted; carries the best bracket.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, LogValue low, LogValue high)
      : std::runtime_error(what), bracket_low(low), bracket_high(high) {}
  LogValue bracket_low;
  LogValue bracket_high;
};

/// Integral of exp(log_f(x)) over (lo, hi), hi possibly +inf, evaluated
/// entirely in shifted log space:
///
///   1. locate the maximizer x* of log_f (golden section; breakpoints split
///      the search),
///   2. subtract log_f(x*) and integrate exp(log_f - max) by adaptive
///      composite Gauss-Legendre panels, bisecting until two refinements
///      agree to tol and extending geometrically into an infinite tail
///      until panel contributions are negligible,
///   3. report max + log(sum).
///
/// log_f may return -inf (integrand zero). breakpoints mark interior kinks
/// or discontinuities; panels never straddle them. Integrands like
/// xi^k e^{-xi} at k = 10^4 overflow any fixed-scale scheme; the peak shift
/// makes this one scale-free.
LogQuadrature integrate_exp_log(const std::function<double(double)>& log_f,
                                double lo, double hi,
                                std::span<const double> breakpoints,
                                const LogQuadratureOptions& opt = {});

}  // namespace ltspec
