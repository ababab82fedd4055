#pragma once

#include <utility>
#include <vector>

#include "ltspec/decay_profile.hpp"
#include "ltspec/landau.hpp"
#include "ltspec/log_value.hpp"

namespace ltspec {

/// Eigenvalues of the compression of a radial multiplier F to the q-th
/// Landau-level eigenspace, indexed contiguously by the angular momentum
/// k = -q, -q+1, ... Radial F is diagonal in the angular-momentum basis, so
/// each eigenvalue is a single 1D integral of F against the channel weight.
struct ToeplitzSpectrum {
  int q = 0;
  FieldConfig config{1.0};
  double quad_tolerance = 1e-12;
  std::vector<LogValue> eigenvalues;  // entry i belongs to k = i - q

  int k_min() const { return -q; }
  int k_max() const { return int(eigenvalues.size()) - 1 - q; }
  const LogValue& at(int k) const { return eigenvalues.at(std::size_t(k + q)); }
};

/// lambda_{q,k}(F) = integral of F(sqrt(2 xi / b)) against w_{q,k}(xi) over
/// (0, inf), with |delta log| <= tol. Positive combinations integrate as one
/// log-domain quadrature; signed combinations split term by term (the
/// eigenvalue is linear in F at fixed (q, k)).
LogValue toeplitz_eigenvalue(int q, int k, const DecayProfile& profile,
                             const FieldConfig& config, double tol = 1e-12);

/// Eigenvalue sequence of a (scaled) super-Gaussian multiplier for
/// k = -q .. k_max. Parallelizes over k; results are placed by index, so the
/// output is independent of scheduling.
ToeplitzSpectrum gamma_sequence(int q, const DecayProfile& profile,
                                const FieldConfig& config, int k_max,
                                double tol = 1e-12, int threads = 1);

/// Eigenvalue sequence of the centred disk indicator of radius r. For q = 0
/// the entries reduce to the regularized lower incomplete gamma; q >= 1 goes
/// through the finite-interval log-domain quadrature.
ToeplitzSpectrum nu_sequence(int q, double r, const FieldConfig& config,
                             int k_max, double tol = 1e-12, int threads = 1);

/// Eigenvalues of two profiles that bracket a potential pointwise; by the
/// minimax principle these bracket the eigenvalue of anything in between,
/// channel by channel.
std::pair<LogValue, LogValue> dominating_bracket(int q,
                                                 const DecayProfile& lower,
                                                 const DecayProfile& upper,
                                                 const FieldConfig& config,
                                                 int k, double tol = 1e-12);

/// CSV with header q,b,k,sign,log_eig,tol; decimal forms round-trip exactly.
std::string spectrum_to_csv(const ToeplitzSpectrum& s);
ToeplitzSpectrum spectrum_from_csv(const std::string& csv);

std::string spectrum_to_json(const ToeplitzSpectrum& s);
ToeplitzSpectrum spectrum_from_json(const std::string& json_text);

}  // namespace ltspec
