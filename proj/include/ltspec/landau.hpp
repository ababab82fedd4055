#pragma once

#include <stdexcept>

#include "ltspec/log_value.hpp"

namespace ltspec {

/// Constant transverse magnetic field, natural units (hbar = 2m = 1).
struct FieldConfig {
  double b = 1.0;

  explicit FieldConfig(double b_) : b(b_) {
    if (!(b > 0.0)) throw std::invalid_argument("FieldConfig: b must be > 0");
  }
};

/// One Landau level: index q and energy (2q+1) b, spacing 2b.
struct LandauLevel {
  int q;
  double energy;

  LandauLevel(int q_, const FieldConfig& config)
      : q(q_), energy((2.0 * q_ + 1.0) * config.b) {
    if (q_ < 0) throw std::invalid_argument("LandauLevel: q must be >= 0");
  }
};

/// Radial weight density w_{q,k}(xi) = [q!/(k+q)!] e^{-xi} xi^k L_q^(k)(xi)^2
/// of the angular-momentum channel k inside level q. It is a probability
/// density on (0, inf); every radial Toeplitz eigenvalue is an average of the
/// multiplier against it.
LogValue weight_log_density(int q, int k, double xi);

/// Diagonal of the level projection kernel, b / (2 pi), independent of q and
/// of position. (The off-diagonal kernel is never needed here: all in-scope
/// potentials are radial or recentred by a magnetic translation, so only the
/// radial weight above enters any computation.)
double kernel_diagonal(const FieldConfig& config);

}  // namespace ltspec
