#include "ltspec/special_functions.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace ltspec {

double log_gamma(double s) {
  if (!(s > 0.0)) throw std::domain_error("log_gamma: argument must be > 0");
  // 14-term Lanczos, g = 607/128.
  static const double coef[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = s;
  double tmp = s + 5.24218750000000000;
  tmp = (s + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += coef[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / s);
}

double log_factorial(long n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  static constexpr int kTable = 2048;
  static std::vector<double> table;
  static std::once_flag once;
  std::call_once(once, [] {
    table.resize(kTable);
    table[0] = 0.0;
    for (int i = 1; i < kTable; ++i) table[i] = table[i - 1] + std::log(double(i));
  });
  if (n < kTable) return table[n];
  return log_gamma(double(n) + 1.0);
}

namespace {

// Pairwise (tree) sum of signed terms already shifted by the max exponent.
double pairwise_sum(const double* v, std::size_t n) {
  if (n == 1) return v[0];
  if (n == 2) return v[0] + v[1];
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

}  // namespace

LaguerrePoly::LaguerrePoly(int q, double alpha) : q_(q), alpha_(alpha) {
  if (q < 0 || q > kMaxLaguerreDegree)
    throw std::invalid_argument("LaguerrePoly: degree outside [0, 32]");
  term_log_.resize(q + 1);
  term_sign_.resize(q + 1);
  // term m: binom(q+alpha, q-m) * (-1)^m / m!
  // binom(x, j) = x (x-1) ... (x-j+1) / j!, the generalized convention.
  for (int m = 0; m <= q; ++m) {
    const int j = q - m;
    double log_abs = -log_factorial(j) - log_factorial(m);
    int sign = (m % 2 == 0) ? +1 : -1;
    for (int i = 0; i < j; ++i) {
      const double factor = q + alpha - i;
      if (factor == 0.0) {
        sign = 0;
        break;
      }
      log_abs += std::log(std::abs(factor));
      if (factor < 0) sign = -sign;
    }
    term_sign_[m] = sign;
    term_log_[m] = log_abs;
  }
}

SignedLog LaguerrePoly::log_value(double xi) const {
  if (xi < 0.0) throw std::domain_error("LaguerrePoly: xi must be >= 0");
  const double log_xi = (xi > 0.0) ? std::log(xi) : 0.0;
  double logs[kMaxLaguerreDegree + 1];
  double shifted[kMaxLaguerreDegree + 1];
  double max_log = -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= q_; ++m) {
    if (term_sign_[m] == 0 || (xi == 0.0 && m > 0)) {
      logs[m] = -std::numeric_limits<double>::infinity();
      continue;
    }
    logs[m] = term_log_[m] + m * log_xi;
    max_log = std::max(max_log, logs[m]);
  }
  if (max_log == -std::numeric_limits<double>::infinity()) return {0, max_log};
  for (int m = 0; m <= q_; ++m)
    shifted[m] = (logs[m] == -std::numeric_limits<double>::infinity())
                     ? 0.0
                     : term_sign_[m] * std::exp(logs[m] - max_log);
  const double s = pairwise_sum(shifted, std::size_t(q_) + 1);
  if (s == 0.0) return {0, -std::numeric_limits<double>::infinity()};
  return {s < 0 ? -1 : +1, max_log + std::log(std::abs(s))};
}

double LaguerrePoly::value(double xi) const {
  const SignedLog v = log_value(xi);
  if (v.sign == 0) return 0.0;
  return v.sign * std::exp(v.log_abs);
}

const std::vector<double>& LaguerrePoly::zeros() const {
  if (zeros_ready_) return zeros_;
  zeros_ = laguerre_zeros(q_, alpha_);
  zeros_ready_ = true;
  return zeros_;
}

double laguerre(int q, double k, double xi) {
  return LaguerrePoly(q, k).value(xi);
}

std::vector<double> laguerre_zeros(int q, double k) {
  if (q < 0 || q > kMaxLaguerreDegree)
    throw std::invalid_argument("laguerre_zeros: degree outside [0, 32]");
  if (q == 0) return {};
  if (k <= -1.0) {
    // L_q^(-m) = (-xi)^m (q-m)!/q! L_{q-m}^(m); the root at 0 sits on the
    // integration boundary and is dropped.
    const double m = -k;
    if (std::abs(m - std::round(m)) > 1e-9 || m > q)
      throw std::invalid_argument("laguerre_zeros: k <= -1 requires integer k >= -q");
    return laguerre_zeros(q - int(std::round(m)), std::round(m));
  }
  // Eigenvalues of the Jacobi matrix of the weight xi^k e^{-xi}.
  Eigen::VectorXd diag(q), sub(std::max(q - 1, 0));
  for (int i = 0; i < q; ++i) diag[i] = 2.0 * i + k + 1.0;
  for (int i = 1; i < q; ++i) sub[i - 1] = std::sqrt(i * (i + k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> roots(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + q);
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// ln of the series sum for P(a, x), x < a + 1. All terms positive and the
// sum is bounded by (a+1)/(a+1-x); no overflow possible.
double log_series_sum(double a, double x) {
  double sum = 1.0, term = 1.0;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * 1e-18) return std::log(sum);
  }
  throw std::runtime_error("log_reg_inc_gamma_lower: series did not converge");
}

// ln of the continued-fraction value for the upper function, x >= a + 1.
// Modified Lentz.
double log_cf_upper(double a, double x) {
  const double fpmin = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return std::log(h);
  }
  throw std::runtime_error("log_reg_inc_gamma_lower: continued fraction stalled");
}

}  // namespace

LogValue log_reg_inc_gamma_lower(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("log_reg_inc_gamma_lower: a must be > 0");
  if (x < 0.0) throw std::domain_error("log_reg_inc_gamma_lower: x must be >= 0");
  if (x == 0.0) return LogValue::zero();
  if (x < a + 1.0) {
    const double log_p = a * std::log(x) - x - log_gamma(a + 1.0) + log_series_sum(a, x);
    return LogValue::from_log(log_p);
  }
  const double log_q = a * std::log(x) - x - log_gamma(a) + log_cf_upper(a, x);
  if (log_q >= 0.0)  // can only be rounding at the switch-over point
    return LogValue::from_log(std::log1p(-std::exp(-1e-16)));
  return LogValue::from_log(std::log1p(-std::exp(log_q)));
}

double gamma_ratio_limit_check(int q, int m, double k) {
  if (q < 0 || m < 0 || m > q)
    throw std::domain_error("gamma_ratio_limit_check: need 0 <= m <= q");
  if (!(k >= 1.0)) throw std::domain_error("gamma_ratio_limit_check: need k >= 1");
  if (q == m) return 1.0;
  return std::exp((m - q) * std::log(k) + log_gamma(k + q) - log_gamma(k + m));
}

}  // namespace ltspec
