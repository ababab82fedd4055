#pragma once

#include <limits>

#include "ltspec/decay_profile.hpp"
#include "ltspec/landau.hpp"
#include "ltspec/potential1d.hpp"

namespace ltspec {

/// The four-branch coefficient family a_mu^(beta) that normalizes every
/// counting law. beta = infinity stands for compactly supported profiles;
/// mu is ignored for beta > 1, where the law loses its mu dependence.
struct AsymptoticLaw {
  double beta;
  double mu;
  FieldConfig config;

  AsymptoticLaw(double beta_, double mu_, const FieldConfig& config_)
      : beta(beta_), mu(mu_), config(config_) {
    if (!(beta > 0.0)) throw std::invalid_argument("AsymptoticLaw: beta must be > 0");
    if (!(mu > 0.0) && !(beta > 1.0))
      throw std::invalid_argument("AsymptoticLaw: mu must be > 0 for beta <= 1");
  }

  static AsymptoticLaw compact_support(const FieldConfig& config) {
    return AsymptoticLaw(std::numeric_limits<double>::infinity(), 1.0, config);
  }
};

/// a_mu^(beta)(kappa) on kappa > e:
///   (b/2)(kappa/mu)^{1/beta}        for beta < 1
///   kappa / ln(1 + 2 mu / b)        for beta = 1
///   [beta/(beta-1)] kappa / ln kappa for 1 < beta < inf
///   kappa / ln kappa                 for beta = inf
/// Strictly increasing on (e, inf) in every branch.
double coefficient(const AsymptoticLaw& law, double kappa);

/// Inverse of the coefficient function at height k.
///
/// For beta <= 1 the inverse is in closed form and `value` is exact. For
/// beta > 1 it is transcendental: `value` is the bisection inverse (1e-12
/// relative) and `surrogate` the k ln k normalization the counting limits
/// are usually quoted against; the two agree only asymptotically, so tests
/// must say which one they use.
struct InverseCoefficient {
  double value;
  double surrogate;
};
InverseCoefficient coefficient_inverse(const AsymptoticLaw& law, double k);

/// Quasi-classical count (b/2pi) |{V > E}| for a radial single-atom profile:
/// (b/2) R(E)^2 with R(E) the super-level radius. Zero once E reaches the
/// supremum.
double quasi_classical_2d(const DecayProfile& profile, const FieldConfig& config,
                          double energy);

/// The 3D analogue: (b/2pi) |{X : U(X) integral(v) > 2 sqrt(E)}| for a
/// separable potential U(X) v(z).
double quasi_classical_3d(const DecayProfile& transverse, const Potential1D& v,
                          const FieldConfig& config, double energy);

/// Exact number of primes <= lambda by sieve; lambda <= 1e7. The table is
/// built once per process on first use.
long prime_pi(double lambda);

}  // namespace ltspec
