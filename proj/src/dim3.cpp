#include "ltspec/dim3.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "ltspec/schrodinger1d.hpp"
#include "ltspec/toeplitz.hpp"

namespace ltspec {

namespace {

constexpr double kEuler = 2.718281828459045235360287;

// Largest Birman-Schwinger eigenvalue for both potentials at two Nystrom
// resolutions; counts must agree across the doubling.
struct ConvergedSpectra {
  BirmanSchwingerSpectrum low_coarse, low_fine;
  BirmanSchwingerSpectrum up_coarse, up_fine;
};

long converged_count(const BirmanSchwingerSpectrum& coarse,
                     const BirmanSchwingerSpectrum& fine, double inverse_coupling,
                     bool& agreed) {
  const long a = coarse.count_above(inverse_coupling);
  const long b = fine.count_above(inverse_coupling);
  agreed = agreed && (a == b);
  return b;
}

}  // namespace

Count3DBracket count_3d_bracket(const SeparableBracket3D& bracket, double E,
                                double epsilon, double tol, int n_grid,
                                int channel_budget) {
  if (!(E > 0.0)) throw std::domain_error("count_3d_bracket: E must be > 0");
  if (epsilon < 0.0) throw std::domain_error("count_3d_bracket: epsilon must be >= 0");

  Count3DBracket out;
  out.epsilon = epsilon;
  out.caveat =
      "higher-level sector contributes a bounded shift that is reported, not "
      "added; compare ratios, not raw counts";

  int n = n_grid;
  for (int attempt = 0; attempt < 4; ++attempt, n *= 2) {
    ConvergedSpectra s{bs_spectrum(E, bracket.v_lower, n),
                       bs_spectrum(E, bracket.v_lower, 2 * n),
                       bs_spectrum(E, bracket.v_upper, n),
                       bs_spectrum(E, bracket.v_upper, 2 * n)};
    const double up_top = s.up_fine.eigenvalues.empty() ? 0.0
                                                        : s.up_fine.eigenvalues[0];
    bool agreed = true;
    long lower = 0, upper = 0;
    int channels = 0;
    bool certified = false;
    std::deque<double> recent;  // log couplings of the upper profile

    for (int k = 0; k <= channel_budget && agreed; ++k) {
      const LogValue coupling_low =
          toeplitz_eigenvalue(0, k, bracket.U_lower, bracket.config, tol);
      const LogValue coupling_up =
          toeplitz_eigenvalue(0, k, bracket.U_upper, bracket.config, tol);
      channels = k + 1;

      if (coupling_low.sign > 0)
        lower += converged_count(s.low_coarse, s.low_fine,
                                 std::exp(-coupling_low.log_mag), agreed);
      if (coupling_up.sign > 0)
        upper += converged_count(
            s.up_coarse, s.up_fine,
            std::exp(-coupling_up.log_mag) / (1.0 + epsilon), agreed);

      // Channel k' contributes nothing once (1+eps) coupling * top BS
      // eigenvalue stays below 1; certify that for the whole tail.
      const double log_up =
          coupling_up.sign > 0 ? coupling_up.log_mag
                               : -std::numeric_limits<double>::infinity();
      recent.push_back(log_up);
      if (recent.size() > 4) recent.pop_front();
      if (up_top <= 0.0) {
        certified = true;
        break;
      }
      const double log_cutoff = -std::log1p(epsilon) - std::log(up_top);
      if (log_up >= log_cutoff) continue;

      if (auto env = analytic_tail_log_envelope(0, bracket.U_upper,
                                                bracket.config, k + 1)) {
        if (*env < log_cutoff) {
          certified = true;
          break;
        }
      }
      if (recent.size() == 4) {
        bool decaying = true;
        for (std::size_t i = 1; i < recent.size(); ++i)
          decaying = decaying && (recent[i] - recent[i - 1] < std::log(0.9));
        if (decaying && log_up < log_cutoff + std::log(1e-3)) {
          certified = true;
          break;
        }
      }
    }

    if (!agreed) continue;  // escalate the Nystrom grid
    out.lower = lower;
    out.upper = upper;
    out.channels_used = channels;
    out.tail_certified = certified;
    return out;
  }
  throw std::runtime_error(
      "count_3d_bracket: channel counts not grid-converged after three doublings");
}

std::vector<RatioRow3D> theorem_ratio_3d(const SeparableBracket3D& bracket,
                                         const std::vector<double>& E_grid,
                                         double epsilon, double tol, int n_grid) {
  const AsymptoticLaw law = law_for_profile(bracket.U_upper, bracket.config);
  if (E_grid.empty()) throw std::invalid_argument("theorem_ratio_3d: empty grid");
  for (std::size_t i = 0; i < E_grid.size(); ++i) {
    if (!(E_grid[i] > 0.0) ||
        !(std::abs(std::log(std::sqrt(E_grid[i]))) > kEuler))
      throw std::invalid_argument(
          "theorem_ratio_3d: every E must satisfy |ln sqrt(E)| > e");
    if (i > 0 && !(E_grid[i] < E_grid[i - 1]))
      throw std::invalid_argument("theorem_ratio_3d: grid must decrease");
  }
  std::vector<RatioRow3D> rows;
  rows.reserve(E_grid.size());
  for (double E : E_grid) {
    const Count3DBracket b = count_3d_bracket(bracket, E, epsilon, tol, n_grid);
    RatioRow3D row;
    row.E = E;
    row.abs_log_sqrt_E = std::abs(0.5 * std::log(E));
    row.lower = b.lower;
    row.upper = b.upper;
    row.coefficient_value = coefficient(law, row.abs_log_sqrt_E);
    row.ratio_lower = b.lower / row.coefficient_value;
    row.ratio_upper = b.upper / row.coefficient_value;
    row.channels_used = b.channels_used;
    row.epsilon = epsilon;
    row.tail_certified = b.tail_certified;
    rows.push_back(row);
  }
  return rows;
}

ProfileBracket gaussian_envelope(double mu, double beta, double delta,
                                 double r_delta, double big_m) {
  if (!(delta > 0.0) || !(delta < mu))
    throw std::invalid_argument("gaussian_envelope: need 0 < delta < mu");
  if (!(big_m >= 1.0))
    throw std::invalid_argument("gaussian_envelope: the disk height must be >= 1");
  const DecayProfile disk = DecayProfile::scaled(big_m, DecayProfile::disk(r_delta));
  return {DecayProfile::difference(DecayProfile::super_gaussian(mu + delta, beta), disk),
          DecayProfile::sum(DecayProfile::super_gaussian(mu - delta, beta), disk)};
}

}  // namespace ltspec
