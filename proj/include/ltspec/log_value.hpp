#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ltspec {

/// A real number stored as (sign, ln|x|).
///
/// This is the scalar used for every quantity that can leave double range:
/// factorials, Gamma-function ratios and the Toeplitz eigenvalues themselves,
/// which decay like exp(-k log k). sign = 0 encodes an exact zero and the
/// stored magnitude is then meaningless.
struct LogValue {
  int sign = 0;
  double log_mag = -std::numeric_limits<double>::infinity();

  static LogValue zero() { return {}; }
  static LogValue one() { return {+1, 0.0}; }

  /// Positive value given directly by its natural log.
  static LogValue from_log(double log_mag) { return {+1, log_mag}; }

  static LogValue from_log(int sign, double log_mag) {
    if (sign == 0 || log_mag == -std::numeric_limits<double>::infinity())
      return zero();
    return {sign < 0 ? -1 : +1, log_mag};
  }

  static LogValue from_real(double x) {
    if (x == 0.0) return zero();
    return {x < 0 ? -1 : +1, std::log(std::abs(x))};
  }

  /// Back to an ordinary double; overflows to +-inf and underflows to 0
  /// when the magnitude leaves double range.
  double to_real() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag);
  }

  bool is_zero() const { return sign == 0; }
  bool is_positive() const { return sign > 0; }

  LogValue operator-() const { return {-sign, log_mag}; }

  friend LogValue operator*(const LogValue& a, const LogValue& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.sign * b.sign, a.log_mag + b.log_mag};
  }

  friend LogValue operator/(const LogValue& a, const LogValue& b) {
    if (b.sign == 0) throw std::domain_error("LogValue: division by zero");
    if (a.sign == 0) return zero();
    return {a.sign * b.sign, a.log_mag - b.log_mag};
  }

  /// Signed log-sum-exp. Exact cancellation (equal magnitudes, opposite
  /// signs) yields an exact zero.
  friend LogValue operator+(const LogValue& a, const LogValue& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogValue& big = (a.log_mag >= b.log_mag) ? a : b;
    const LogValue& small = (a.log_mag >= b.log_mag) ? b : a;
    const double d = small.log_mag - big.log_mag;  // <= 0
    if (a.sign == b.sign)
      return {a.sign, big.log_mag + std::log1p(std::exp(d))};
    if (d == 0.0) return zero();
    return {big.sign, big.log_mag + std::log1p(-std::exp(d))};
  }

  friend LogValue operator-(const LogValue& a, const LogValue& b) {
    return a + (-b);
  }

  LogValue& operator*=(const LogValue& o) { return *this = *this * o; }
  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }

  /// Scale by a plain double.
  friend LogValue operator*(double c, const LogValue& v) {
    return from_real(c) * v;
  }

  /// Signed comparison (as real numbers).
  friend bool operator<(const LogValue& a, const LogValue& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.sign == 0) return false;
    if (a.sign > 0) return a.log_mag < b.log_mag;
    return a.log_mag > b.log_mag;
  }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }

  /// True when sign > 0 and scale * value > threshold, threshold > 0.
  /// The comparison is done in log space, so it is meaningful for values
  /// far below double underflow.
  bool exceeds(double threshold, double scale = 1.0) const {
    if (sign <= 0 || scale <= 0.0) return false;
    return log_mag + std::log(scale) > std::log(threshold);
  }
};

}  // namespace ltspec
