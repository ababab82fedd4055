#include "ltspec/asymptotics.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ltspec {

namespace {
constexpr double kEuler = 2.718281828459045235360287;
}  // namespace

double coefficient(const AsymptoticLaw& law, double kappa) {
  if (!(kappa > kEuler))
    throw std::domain_error("coefficient: kappa must exceed e");
  const double b = law.config.b;
  if (law.beta < 1.0) return 0.5 * b * std::pow(kappa / law.mu, 1.0 / law.beta);
  if (law.beta == 1.0) return kappa / std::log1p(2.0 * law.mu / b);
  if (std::isfinite(law.beta))
    return (law.beta / (law.beta - 1.0)) * kappa / std::log(kappa);
  return kappa / std::log(kappa);
}

InverseCoefficient coefficient_inverse(const AsymptoticLaw& law, double k) {
  if (!(k >= 1.0)) throw std::domain_error("coefficient_inverse: need k >= 1");
  const double b = law.config.b;
  if (law.beta < 1.0) {
    const double v = law.mu * std::pow(2.0 * k / b, law.beta);
    return {v, v};
  }
  if (law.beta == 1.0) {
    const double v = k * std::log1p(2.0 * law.mu / b);
    return {v, v};
  }
  const double surrogate = std::isfinite(law.beta)
                               ? k * std::log(k) * (law.beta - 1.0) / law.beta
                               : k * std::log(k);
  // bisection on the increasing branch
  double lo = kEuler * (1.0 + 1e-12);
  if (coefficient(law, lo) >= k)
    throw std::domain_error("coefficient_inverse: k below the branch range");
  double hi = std::max(4.0 * kEuler, 4.0 * surrogate);
  while (coefficient(law, hi) < k) hi *= 2.0;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    (coefficient(law, mid) < k ? lo : hi) = mid;
    if (hi - lo <= 1e-12 * hi) break;
  }
  return {0.5 * (lo + hi), surrogate};
}

namespace {

double super_level_area_count(const DecayProfile& profile,
                              const FieldConfig& config, double level) {
  if (!profile.single_term())
    throw std::invalid_argument(
        "quasi_classical: profile must be a single scaled atom to invert");
  const auto& term = profile.terms()[0];
  if (!(term.coeff > 0.0))
    throw std::invalid_argument("quasi_classical: profile must be nonnegative");
  if (level >= term.coeff * atom_sup(term.atom)) return 0.0;
  const double radius = atom_super_level_radius(term.atom, level / term.coeff);
  return 0.5 * config.b * radius * radius;
}

}  // namespace

double quasi_classical_2d(const DecayProfile& profile, const FieldConfig& config,
                          double energy) {
  if (!(energy > 0.0))
    throw std::domain_error("quasi_classical_2d: energy must be > 0");
  return super_level_area_count(profile, config, energy);
}

double quasi_classical_3d(const DecayProfile& transverse, const Potential1D& v,
                          const FieldConfig& config, double energy) {
  if (!(energy > 0.0))
    throw std::domain_error("quasi_classical_3d: energy must be > 0");
  const double threshold = 2.0 * std::sqrt(energy) / v.moment0();
  return super_level_area_count(transverse, config, threshold);
}

namespace {

constexpr long kSieveBudget = 10000000;

const std::vector<long>& prime_pi_table() {
  static std::vector<long> counts;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<bool> composite(kSieveBudget + 1, false);
    for (long p = 2; p * p <= kSieveBudget; ++p)
      if (!composite[p])
        for (long m = p * p; m <= kSieveBudget; m += p) composite[m] = true;
    counts.resize(kSieveBudget + 1, 0);
    long running = 0;
    for (long n = 2; n <= kSieveBudget; ++n) {
      if (!composite[n]) ++running;
      counts[n] = running;
    }
  });
  return counts;
}

}  // namespace

long prime_pi(double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("prime_pi: lambda must be > 0");
  if (lambda > double(kSieveBudget))
    throw std::domain_error("prime_pi: lambda exceeds the sieve budget 1e7");
  const long n = long(std::floor(lambda));
  if (n < 2) return 0;
  return prime_pi_table()[n];
}

}  // namespace ltspec
