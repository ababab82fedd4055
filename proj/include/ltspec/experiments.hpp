#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltspec {

/// Thrown for malformed requests (unknown names, bad grids, invalid
/// parameter combinations); the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every numeric default in one place; flags override per run.
struct Settings {
  double epsilon = 0.01;    // counting sandwich parameter
  double quad_tol = 1e-12;  // |delta log| target of the Toeplitz quadrature
  int k_budget = 200000;    // channel scan budget
  int n_grid = 512;         // Nystrom nodes for the 1D solver
  int threads = 1;
};

/// A declarative experiment: a theorem family tag, numeric parameters, an
/// output path and a seed for any sampled checks. Identical spec + seed
/// produces byte-identical CSV output at any thread count.
struct ExperimentSpec {
  std::string name;
  std::string theorem;  // one of T2.1, T2.3, T2.5, T2.6, P3.1, P3.2, L5.2
  std::map<std::string, double> parameters;
  std::string output_path;
  long seed = 0;

  std::string to_json() const;
  static ExperimentSpec from_json(const std::string& text);

  double param(const std::string& key) const;
  double param_or(const std::string& key, double fallback) const;
};

struct ExperimentReport {
  std::string name;
  bool tolerances_met = false;
  bool converged = true;
  double wall_ms = 0.0;
  std::string csv;                     // the primary artifact
  std::vector<std::string> messages;  // one pass/fail line per declared check
};

/// Built-in experiments reproducing the verification sweeps; names unique,
/// at least one per theorem family.
const std::vector<ExperimentSpec>& builtin_experiments();
ExperimentSpec find_builtin(const std::string& name);

/// Validates, dispatches to the matching module pipeline, writes the CSV and
/// a JSON sidecar (schema 1) when output_path is set, and evaluates the
/// family's declared tolerances.
ExperimentReport run_experiment(const ExperimentSpec& spec,
                                const Settings& settings);

/// Exit-code contract shared by the CLI and CI:
/// 0 tolerances met, 1 tolerance failed, 2 usage error, 3 non-convergence.
enum ExitCode {
  kExitPass = 0,
  kExitToleranceFailed = 1,
  kExitUsage = 2,
  kExitNonConvergence = 3,
};

/// Least-squares slope of y against x; the uniform trend metric. Integer
/// counts make ratio sequences oscillate by ~1/a around their drift, so
/// "distance to 1 shrinks" is asserted on the fitted slope, not pointwise.
double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y);

/// Log-spaced decreasing grid from start down to stop.
std::vector<double> log_grid(double start, double stop, int points);

}  // namespace ltspec
