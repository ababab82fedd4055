#pragma once

#include <limits>
#include <variant>
#include <vector>

namespace ltspec {

/// Radial multiplier profile: a weighted combination of a few atomic shapes.
///
/// Atoms are nonnegative, bounded and nonincreasing in the radius. Ordinary
/// profiles carry positive weights only; envelope construction (a decaying
/// profile minus a scaled disk) produces signed combinations, which the
/// Toeplitz layer evaluates term by term through linearity.
class DecayProfile {
 public:
  /// exp(-mu r^{2 beta}); value 1 at the origin.
  struct SuperGaussian {
    double mu;
    double beta;
  };

  /// Indicator of a disk of the given radius. A nonzero center_offset is
  /// recorded for reporting only: a magnetic translation recentres the disk
  /// without changing any Toeplitz spectrum, so evaluation is centred.
  struct Disk {
    double radius;
    double center_offset = 0.0;
  };

  /// r^{-alpha}, held constant at cutoff^{-alpha} inside r <= cutoff so the
  /// profile stays bounded.
  struct PowerLaw {
    double alpha;
    double inner_cutoff;
  };

  /// Piecewise-linear interpolation of nonincreasing radial samples;
  /// constant before the first radius, zero beyond the last.
  struct Tabulated {
    std::vector<double> radius;
    std::vector<double> value;
  };

  using Atom = std::variant<SuperGaussian, Disk, PowerLaw, Tabulated>;

  struct Term {
    double coeff;
    Atom atom;
  };

  static DecayProfile super_gaussian(double mu, double beta);
  static DecayProfile disk(double radius, double center_offset = 0.0);
  static DecayProfile power_law(double alpha, double inner_cutoff);
  static DecayProfile tabulated(std::vector<double> radius,
                                std::vector<double> value);
  /// c * p, c > 0.
  static DecayProfile scaled(double c, const DecayProfile& p);
  static DecayProfile sum(const DecayProfile& a, const DecayProfile& b);
  /// a - b as a signed combination (not clamped).
  static DecayProfile difference(const DecayProfile& a, const DecayProfile& b);

  const std::vector<Term>& terms() const { return terms_; }
  bool single_term() const { return terms_.size() == 1; }
  bool all_coefficients_positive() const;

  /// Signed pointwise value at the given radius.
  double value(double radius) const;

  /// Supremum; exact for positive combinations (atoms peak at the origin).
  double sup_value() const;

  /// True if this is a single (scaled) super-Gaussian; fills mu/beta/scale.
  bool as_super_gaussian(double& mu, double& beta, double& scale) const;
  bool as_disk(double& radius, double& scale) const;

 private:
  std::vector<Term> terms_;
};

/// Atom helpers shared by the Toeplitz quadrature and the quasi-classical
/// counters.
double atom_value(const DecayProfile::Atom& atom, double radius);
double atom_log_value(const DecayProfile::Atom& atom, double radius);
double atom_sup(const DecayProfile::Atom& atom);
/// Radius where the atom is cut off or kinked; +inf when smooth everywhere.
std::vector<double> atom_radial_breakpoints(const DecayProfile::Atom& atom);
/// End of support; +inf for atoms positive everywhere.
double atom_support_radius(const DecayProfile::Atom& atom);
/// Largest radius R with atom(R) > level, for strictly admissible levels;
/// 0 when the super-level set is empty. Atoms are nonincreasing, so the
/// super-level set is the disk of this radius.
double atom_super_level_radius(const DecayProfile::Atom& atom, double level);

}  // namespace ltspec
