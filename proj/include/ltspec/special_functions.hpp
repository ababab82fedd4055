#pragma once

#include <vector>

#include "ltspec/log_value.hpp"

namespace ltspec {

/// Largest supported Laguerre degree. The explicit signed sum loses control
/// of cancellation beyond this; nothing in the experiments needs more.
inline constexpr int kMaxLaguerreDegree = 32;

/// ln Gamma(s), s > 0. Lanczos approximation, relative error of the log
/// below 1e-13 over the whole domain.
double log_gamma(double s);

/// ln n! with a cached table for small n.
double log_factorial(long n);

/// A signed number in log form, used where LogValue construction would be
/// needless ceremony.
struct SignedLog {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();
};

/// Generalized Laguerre polynomial L_q^(alpha) of small degree q evaluated by
/// the explicit (q+1)-term signed sum with log-domain binomial coefficients,
/// valid for any real alpha (generalized binomial convention). The parameter
/// alpha plays the role of the angular-momentum index and may reach 1e6 and
/// beyond, which rules out the recurrence in alpha.
///
/// Relative accuracy degrades near the q real zeros; the absolute error stays
/// below ~1e-10 * (alpha+q)^q * exp(xi/(alpha+q)) there (term-scale rounding).
class LaguerrePoly {
 public:
  LaguerrePoly(int q, double alpha);

  int degree() const { return q_; }
  double alpha() const { return alpha_; }

  /// Value as a double; may overflow for extreme (alpha, xi).
  double value(double xi) const;

  /// Value as (sign, log magnitude); never overflows.
  SignedLog log_value(double xi) const;

  /// The q real zeros, ascending. Computed once on first use from the
  /// symmetric tridiagonal Jacobi matrix of the Laguerre weight.
  const std::vector<double>& zeros() const;

 private:
  int q_;
  double alpha_;
  std::vector<double> term_log_;   // log |binom(q+alpha, q-m) / m!|
  std::vector<int> term_sign_;
  mutable std::vector<double> zeros_;
  mutable bool zeros_ready_ = false;
};

/// One-shot evaluation of L_q^(k)(xi). Prefer LaguerrePoly when evaluating
/// the same polynomial at many points.
double laguerre(int q, double k, double xi);

/// Zeros of L_q^(k) on (0, inf), ascending. Integer k >= -q is reduced to a
/// positive-parameter polynomial where needed.
std::vector<double> laguerre_zeros(int q, double k);

/// ln P(a, x) with P the regularized lower incomplete gamma function,
/// computed fully in log space: power series for x < a + 1, Lentz continued
/// fraction for the complement otherwise. Accurate down to P ~ e^{-12000}.
LogValue log_reg_inc_gamma_lower(double a, double x);

/// k^{m-q} * Gamma(k+q) / Gamma(k+m), the ratio whose limit is 1 as
/// k -> infinity. Exposed so the limit can be probed directly.
double gamma_ratio_limit_check(int q, int m, double k);

}  // namespace ltspec
