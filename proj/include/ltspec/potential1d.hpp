#pragma once

#include <variant>
#include <vector>

namespace ltspec {

/// Nonnegative longitudinal potential v(z), not identically zero, with
/// certified moments: moment0 = integral of v, moment1_abs = integral of
/// |z| v. Analytic kinds store closed-form moments; tabulated ones use the
/// trapezoid rule over their samples.
class Potential1D {
 public:
  /// Indicator of [-a, a].
  struct SquareWell {
    double half_width;
  };
  /// exp(-z^2 / (2 sigma^2)).
  struct Gaussian {
    double sigma;
  };
  /// exp(-rate |z|).
  struct Exponential {
    double rate;
  };
  /// Even extension of samples on z >= 0 is NOT assumed: samples cover the
  /// whole axis, piecewise linear, zero outside.
  struct Tabulated {
    std::vector<double> z;
    std::vector<double> v;
  };

  using Kind = std::variant<SquareWell, Gaussian, Exponential, Tabulated>;

  static Potential1D square_well(double half_width);
  static Potential1D gaussian(double sigma);
  static Potential1D exponential(double rate);
  static Potential1D tabulated(std::vector<double> z, std::vector<double> v);

  double value(double z) const;
  double max_value() const;
  double moment0() const { return moment0_; }
  double moment1_abs() const { return moment1_abs_; }
  /// Radius beyond which v < 1e-14 * max v.
  double support_radius() const { return support_radius_; }
  /// Integral of v over |z| > L, used for resolvent-kernel truncation.
  double tail_mass(double L) const;
  const Kind& kind() const { return kind_; }

 private:
  explicit Potential1D(Kind kind);
  Kind kind_;
  double moment0_ = 0.0;
  double moment1_abs_ = 0.0;
  double support_radius_ = 0.0;
  double max_value_ = 0.0;
};

}  // namespace ltspec
