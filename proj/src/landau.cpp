#include "ltspec/landau.hpp"

#include <cmath>

#include "ltspec/special_functions.hpp"

namespace ltspec {

LogValue weight_log_density(int q, int k, double xi) {
  if (q < 0 || k < -q) throw std::invalid_argument("weight_log_density: need q >= 0, k >= -q");
  if (!(xi > 0.0)) throw std::invalid_argument("weight_log_density: xi must be > 0");
  const SignedLog lag = LaguerrePoly(q, double(k)).log_value(xi);
  if (lag.sign == 0) return LogValue::zero();
  const double log_norm = log_factorial(q) - log_factorial(k + q);
  return LogValue::from_log(log_norm - xi + k * std::log(xi) + 2.0 * lag.log_abs);
}

double kernel_diagonal(const FieldConfig& config) {
  return config.b / (2.0 * M_PI);
}

}  // namespace ltspec
