#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// a plain adaptive Simpson rule in linear arithmetic, the explicit
// finite-double-sum value of the Gaussian-multiplier channel eigenvalues,
// and the square-well transcendental quantization conditions.

#include <functional>
#include <vector>

#include "ltspec/log_value.hpp"

namespace ltspec::testing {

/// seeds = number of uniform panels that start the recursion; raise it when
/// the integrand is a needle the default stencil could miss entirely.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int seeds = 32);

/// Channel eigenvalue of exp(-mu |x|^2) on level q at angular momentum
/// k >= 0, from the explicit double sum over the expansion of the squared
/// polynomial factor (every integral is a factorial).
LogValue gaussian_channel_eigenvalue(int q, int k, double mu, double b);

/// Bound states of -d''/dz'' - g * indicator([-a, a]): the decay rates
/// kappa of all bound states, descending.
std::vector<double> square_well_kappas(double g, double a);
long square_well_count(double energy, double g, double a);
double square_well_ground_energy(double g, double a);

}  // namespace ltspec::testing
