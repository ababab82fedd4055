#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltspec/asymptotics.hpp"
#include "ltspec/decay_profile.hpp"
#include "ltspec/landau.hpp"
#include "ltspec/toeplitz.hpp"

namespace ltspec {

/// Integer bounds on a counting function. The reduction to the Toeplitz
/// surrogate discards bounded correction terms; they are reported in the
/// caveat, never added, and every contract downstream is a ratio in which
/// a bounded shift vanishes. A bracket whose channel scan could not certify
/// its tail is non-authoritative.
struct CountBracket {
  long lower = 0;
  long upper = 0;
  double epsilon = 0.0;
  bool tail_certified = false;
  int k_scanned = 0;
  std::string caveat;
};

/// #{ k : scale * lambda_k > threshold }, strict (open interval above the
/// threshold), over the entries present in the spectrum.
long n_plus(double threshold, const ToeplitzSpectrum& spectrum,
            double scale = 1.0);

struct ProfileBracket {
  DecayProfile lower;
  DecayProfile upper;
};

/// Rigorous log-domain envelope B(k) with lambda_{q,k'}(profile) <= B(k) for
/// all k' >= k, available for positive combinations of Gaussian (beta = 1)
/// and disk atoms once B is provably decreasing at k. nullopt otherwise.
std::optional<double> analytic_tail_log_envelope(int q,
                                                 const DecayProfile& profile,
                                                 const FieldConfig& config,
                                                 int k);

/// Counting bounds for the eigenvalues above E of the level-q compression of
/// a potential squeezed between two radial profiles:
///   lower = #{ k : (1 - eps) lambda_k(lower profile) > E }
///   upper = #{ k : (1 + eps) lambda_k(upper profile) > E }.
/// The scan over k stops once the remaining channels are certified below
/// threshold: by the analytic envelope where it applies, otherwise by an
/// empirical-ratio certificate (three consecutive decay ratios below 0.9 and
/// three orders of magnitude of headroom). A scan that exhausts its budget
/// returns tail_certified = false.
CountBracket count_near_level(int q, const ProfileBracket& v_bracket,
                              const FieldConfig& config, double E,
                              double epsilon, double tol = 1e-12,
                              int k_budget = 200000);

struct RatioRow2D {
  double E = 0.0;
  double abs_log_E = 0.0;
  long lower = 0;
  long upper = 0;
  double coefficient_value = 0.0;
  double ratio_lower = 0.0;
  double ratio_upper = 0.0;
  double epsilon = 0.0;
  bool tail_certified = false;
};

/// Counting bounds along a decreasing energy grid, normalized by the
/// coefficient function of the law the profile decays under (super-Gaussian
/// maps to its (beta, mu), a disk to the compact-support branch). Every E
/// must sit in (0, e^{-e}) so the normalization is defined.
std::vector<RatioRow2D> theorem_ratio_2d(int q, const DecayProfile& profile,
                                         const FieldConfig& config,
                                         const std::vector<double>& E_grid,
                                         double epsilon, double tol = 1e-12);

/// The law a profile decays under, for normalization purposes.
AsymptoticLaw law_for_profile(const DecayProfile& profile,
                              const FieldConfig& config);

}  // namespace ltspec
