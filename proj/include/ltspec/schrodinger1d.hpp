#pragma once

#include <vector>

#include "ltspec/potential1d.hpp"

namespace ltspec {

/// Spectrum of the unit-coupling Birman-Schwinger operator
///   (2 kappa)^{-1} sqrt(v(z)) e^{-kappa |z - z'|} sqrt(v(z'))
/// at kappa = sqrt(E), discretized by Nystrom on composite Gauss-Legendre
/// nodes whose panel boundaries follow the sqrt(v) mass. Grid-converged:
/// the node count is doubled until the eigenvalues relevant for counting
/// stabilize.
///
/// Counting eigenvalues of -d^2/dz^2 - g v below -E reduces to counting
/// Birman-Schwinger eigenvalues above 1/g, so one decomposition serves every
/// coupling at this E.
struct BirmanSchwingerSpectrum {
  double kappa;
  int nodes;
  std::vector<double> eigenvalues;  // descending, positive part only

  /// N(-kappa^2; h(g v)) = #{ j : g * m_j > 1 }.
  long count_above(double inverse_coupling) const;
};

BirmanSchwingerSpectrum bs_spectrum(double E, const Potential1D& v,
                                    int n_grid = 512);

/// Number of eigenvalues of h(g v) = -d^2/dz^2 - g v below -E. The integer
/// must agree across one grid doubling; three failed doublings raise.
long bs_count(double E, double g, const Potential1D& v, int n_grid = 512);

/// The unique bound-state magnitude EE(g v) > 0 in the weak-coupling regime
/// g * moment1_abs < 1, solved by bisection in kappa on the largest
/// Birman-Schwinger eigenvalue (power iteration), 1e-8 relative on EE.
double ground_state_energy(double g, const Potential1D& v, int n_grid = 512);

struct WeakCouplingRow {
  double g;
  double ratio;  // sqrt(EE(g v)) / ((g/2) moment0)
};

/// Tabulates the weak-coupling ratio along a decreasing coupling grid; every
/// g must sit inside the uniqueness regime.
std::vector<WeakCouplingRow> weak_coupling_ratio(const std::vector<double>& g_grid,
                                                 const Potential1D& v,
                                                 int n_grid = 512);

}  // namespace ltspec
