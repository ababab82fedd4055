#include "ltspec/counting2d.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "ltspec/special_functions.hpp"

namespace ltspec {

namespace {

constexpr double kEuler = 2.718281828459045235360287;

// Channel-k envelope of a single atom, from |L_q^(k)(xi)| <= (k+q)^q
// exp(xi/(k+q)):
//   Gaussian:  (k+q)^{2q} (1 + lam - 2/(k+q))^{-(k+1)},  lam = 2 mu / b
//   Disk:      (k+q)^{2q} x^{k+1} / (k+1)!,               x = b r^2 / 2
// Both are provably nonincreasing once their one-step ratio condition holds,
// and the conditions are monotone in k.
struct AtomEnvelope {
  bool valid = false;
  double log_bound = 0.0;
  bool decreasing = false;
};

AtomEnvelope atom_envelope(int q, const DecayProfile::Atom& atom,
                           const FieldConfig& config, int k) {
  AtomEnvelope e;
  if (k < 1) return e;
  const double kq = double(k) + q;
  if (const auto* sg = std::get_if<DecayProfile::SuperGaussian>(&atom)) {
    if (sg->beta != 1.0) return e;
    const double lam = 2.0 * sg->mu / config.b;
    const double shifted = 1.0 + lam - 2.0 / kq;
    if (!(shifted > 1.0)) return e;
    e.valid = true;
    e.log_bound = 2.0 * q * std::log(kq) - (k + 1.0) * std::log(shifted);
    e.decreasing = 2.0 * q * std::log1p(1.0 / kq) < std::log(shifted);
    return e;
  }
  if (const auto* disk = std::get_if<DecayProfile::Disk>(&atom)) {
    const double x = 0.5 * config.b * disk->radius * disk->radius;
    e.valid = true;
    e.log_bound = 2.0 * q * std::log(kq) + (k + 1.0) * std::log(x) -
                  log_factorial(k + 1);
    e.decreasing = 2.0 * q * std::log1p(1.0 / kq) + std::log(x) <
                   std::log(double(k) + 2.0);
    return e;
  }
  return e;
}

}  // namespace

long n_plus(double threshold, const ToeplitzSpectrum& spectrum, double scale) {
  if (!(threshold > 0.0)) throw std::domain_error("n_plus: threshold must be > 0");
  long count = 0;
  for (const LogValue& v : spectrum.eigenvalues)
    if (v.exceeds(threshold, scale)) ++count;
  return count;
}

std::optional<double> analytic_tail_log_envelope(int q,
                                                 const DecayProfile& profile,
                                                 const FieldConfig& config,
                                                 int k) {
  if (!profile.all_coefficients_positive()) return std::nullopt;
  double total = -std::numeric_limits<double>::infinity();
  for (const auto& term : profile.terms()) {
    const AtomEnvelope e = atom_envelope(q, term.atom, config, k);
    if (!e.valid || !e.decreasing) return std::nullopt;
    const double lt = std::log(term.coeff) + e.log_bound;
    total = std::isinf(total)
                ? lt
                : std::max(total, lt) + std::log1p(std::exp(-std::abs(total - lt)));
  }
  return total;
}

CountBracket count_near_level(int q, const ProfileBracket& v_bracket,
                              const FieldConfig& config, double E,
                              double epsilon, double tol, int k_budget) {
  if (!(E > 0.0)) throw std::domain_error("count_near_level: E must be > 0");
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw std::domain_error("count_near_level: epsilon must lie in [0, 1)");

  CountBracket out;
  out.epsilon = epsilon;
  out.caveat =
      "bounded spectral-shift corrections of the full operator are not "
      "included; compare ratios, not raw counts";

  const double log_threshold = std::log(E);
  const double log_up_scale = std::log1p(epsilon);

  std::deque<double> recent_up;  // log magnitudes of recent upper entries
  int below_since = -1;          // entries below threshold so far, upper side

  for (int k = -q; k <= k_budget - q; ++k) {
    const LogValue low = toeplitz_eigenvalue(q, k, v_bracket.lower, config, tol);
    const LogValue up = toeplitz_eigenvalue(q, k, v_bracket.upper, config, tol);
    out.k_scanned = k;
    if (low.exceeds(E, 1.0 - epsilon)) ++out.lower;
    if (up.exceeds(E, 1.0 + epsilon)) ++out.upper;

    const double log_up = up.sign > 0 ? up.log_mag : -std::numeric_limits<double>::infinity();
    recent_up.push_back(log_up);
    if (recent_up.size() > 4) recent_up.pop_front();
    if (log_up + log_up_scale <= log_threshold && below_since < 0) below_since = k;
    if (log_up + log_up_scale > log_threshold) below_since = -1;
    if (below_since < 0) continue;

    // analytic certificate for the remaining channels
    if (auto env = analytic_tail_log_envelope(q, v_bracket.upper, config, k + 1)) {
      if (*env + log_up_scale < log_threshold) {
        out.tail_certified = true;
        return out;
      }
    }
    // empirical-ratio certificate: three consecutive decay ratios below 0.9
    // plus three orders of magnitude of headroom
    if (recent_up.size() == 4) {
      bool decaying = true;
      for (std::size_t i = 1; i < recent_up.size(); ++i)
        decaying = decaying && (recent_up[i] - recent_up[i - 1] < std::log(0.9));
      if (decaying && log_up + log_up_scale < log_threshold + std::log(1e-3)) {
        out.tail_certified = true;
        return out;
      }
    }
  }
  out.tail_certified = false;
  return out;
}

AsymptoticLaw law_for_profile(const DecayProfile& profile,
                              const FieldConfig& config) {
  double mu, beta, scale, radius;
  if (profile.as_super_gaussian(mu, beta, scale))
    return AsymptoticLaw(beta, mu, config);
  if (profile.as_disk(radius, scale)) return AsymptoticLaw::compact_support(config);
  throw std::invalid_argument(
      "law_for_profile: profile must be a single super-Gaussian or disk");
}

std::vector<RatioRow2D> theorem_ratio_2d(int q, const DecayProfile& profile,
                                         const FieldConfig& config,
                                         const std::vector<double>& E_grid,
                                         double epsilon, double tol) {
  const AsymptoticLaw law = law_for_profile(profile, config);
  if (E_grid.empty()) throw std::invalid_argument("theorem_ratio_2d: empty grid");
  for (std::size_t i = 0; i < E_grid.size(); ++i) {
    if (!(E_grid[i] > 0.0) || !(std::abs(std::log(E_grid[i])) > kEuler))
      throw std::invalid_argument(
          "theorem_ratio_2d: every E must sit in (0, e^{-e})");
    if (i > 0 && !(E_grid[i] < E_grid[i - 1]))
      throw std::invalid_argument("theorem_ratio_2d: grid must decrease");
  }
  std::vector<RatioRow2D> rows;
  rows.reserve(E_grid.size());
  for (double E : E_grid) {
    const CountBracket bracket =
        count_near_level(q, {profile, profile}, config, E, epsilon, tol);
    RatioRow2D row;
    row.E = E;
    row.abs_log_E = std::abs(std::log(E));
    row.lower = bracket.lower;
    row.upper = bracket.upper;
    row.coefficient_value = coefficient(law, row.abs_log_E);
    row.ratio_lower = bracket.lower / row.coefficient_value;
    row.ratio_upper = bracket.upper / row.coefficient_value;
    row.epsilon = epsilon;
    row.tail_certified = bracket.tail_certified;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ltspec
