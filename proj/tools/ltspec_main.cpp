// Command-line harness: Toeplitz eigenvalue sequences, counting-function
// sweeps in two and three dimensions, the 1D Birman-Schwinger solver and the
// asymptotic coefficient functions, with CSV/JSON output suitable for CI.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ltspec/asymptotics.hpp"
#include "ltspec/counting2d.hpp"
#include "ltspec/csv.hpp"
#include "ltspec/dim3.hpp"
#include "ltspec/experiments.hpp"
#include "ltspec/parallel.hpp"
#include "ltspec/quadrature.hpp"
#include "ltspec/schrodinger1d.hpp"
#include "ltspec/toeplitz.hpp"

namespace {

using namespace ltspec;

struct ProfileFlags {
  std::string kind = "gaussian";
  double mu = 1.0;
  double beta = 1.0;
  double r = 1.0;
  double alpha = 2.0;
  double cutoff = 0.1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--profile", kind, "gaussian | disk | powerlaw")
        ->check(CLI::IsMember({"gaussian", "disk", "powerlaw"}));
    cmd->add_option("--mu", mu, "super-Gaussian decay rate");
    cmd->add_option("--beta", beta, "super-Gaussian decay exponent");
    cmd->add_option("--r", r, "disk radius");
    cmd->add_option("--alpha", alpha, "power-law exponent");
    cmd->add_option("--cutoff", cutoff, "power-law inner cutoff");
  }

  DecayProfile build() const {
    if (kind == "gaussian") return DecayProfile::super_gaussian(mu, beta);
    if (kind == "disk") return DecayProfile::disk(r);
    return DecayProfile::power_law(alpha, cutoff);
  }
};

struct PotentialFlags {
  std::string kind = "squarewell";
  double half_width = 1.0;
  double sigma = 1.0;
  double rate = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--v-kind", kind, "squarewell | gaussian | exponential")
        ->check(CLI::IsMember({"squarewell", "gaussian", "exponential"}));
    cmd->add_option("--v-half-width", half_width, "square-well half width");
    cmd->add_option("--v-sigma", sigma, "Gaussian width");
    cmd->add_option("--v-rate", rate, "exponential decay rate");
  }

  Potential1D build() const {
    if (kind == "squarewell") return Potential1D::square_well(half_width);
    if (kind == "gaussian") return Potential1D::gaussian(sigma);
    return Potential1D::exponential(rate);
  }
};

std::vector<double> parse_e_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4)
    throw UsageError("--e-grid expects start,stop,points,log");
  const double start = std::stod(parts[0]);
  const double stop = std::stod(parts[1]);
  const int points = std::stoi(parts[2]);
  if (parts[3] != "log")
    throw UsageError("--e-grid: only log spacing is supported");
  return log_grid(start, stop, points);
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << content;
}

std::string rows2d_to_csv(const std::vector<RatioRow2D>& rows, int q, double beta,
                          double mu, double b) {
  CsvWriter w;
  w.row({"E", "abs_log_E", "lower", "upper", "coefficient_value", "ratio_lower",
         "ratio_upper", "epsilon", "tail_certified", "q", "beta", "mu", "b"});
  for (const auto& r : rows)
    w.row({format_double(r.E), format_double(r.abs_log_E), std::to_string(r.lower),
           std::to_string(r.upper), format_double(r.coefficient_value),
           format_double(r.ratio_lower), format_double(r.ratio_upper),
           format_double(r.epsilon), r.tail_certified ? "true" : "false",
           std::to_string(q), format_double(beta), format_double(mu),
           format_double(b)});
  return w.str();
}

std::string rows2d_to_json(const std::vector<RatioRow2D>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"E", r.E},
                 {"abs_log_E", r.abs_log_E},
                 {"lower", r.lower},
                 {"upper", r.upper},
                 {"coefficient_value", r.coefficient_value},
                 {"ratio_lower", r.ratio_lower},
                 {"ratio_upper", r.ratio_upper},
                 {"epsilon", r.epsilon},
                 {"tail_certified", r.tail_certified}});
  return j.dump(2) + "\n";
}

std::string rows3d_to_csv(const std::vector<RatioRow3D>& rows) {
  CsvWriter w;
  w.row({"E", "abs_log_sqrtE", "lower", "upper", "coefficient_value",
         "ratio_lower", "ratio_upper", "channels_used", "epsilon",
         "tail_certified"});
  for (const auto& r : rows)
    w.row({format_double(r.E), format_double(r.abs_log_sqrt_E),
           std::to_string(r.lower), std::to_string(r.upper),
           format_double(r.coefficient_value), format_double(r.ratio_lower),
           format_double(r.ratio_upper), std::to_string(r.channels_used),
           format_double(r.epsilon), r.tail_certified ? "true" : "false"});
  return w.str();
}

std::string rows3d_to_json(const std::vector<RatioRow3D>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"E", r.E},
                 {"abs_log_sqrtE", r.abs_log_sqrt_E},
                 {"lower", r.lower},
                 {"upper", r.upper},
                 {"coefficient_value", r.coefficient_value},
                 {"ratio_lower", r.ratio_lower},
                 {"ratio_upper", r.ratio_upper},
                 {"channels_used", r.channels_used},
                 {"epsilon", r.epsilon},
                 {"tail_certified", r.tail_certified}});
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-level Toeplitz spectra and eigenvalue-counting laboratory"};
  app.require_subcommand(1);

  // shared flags
  int q = 0;
  double b = 1.0;
  double epsilon = 0.01;
  double tol = 1e-12;
  int k_max = 64;
  int threads = 1;
  int n_grid = 512;
  long seed = 0;
  std::string e_grid_text = "1e-4,1e-12,5,log";
  std::string out_path;
  std::string format = "csv";

  auto add_common = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--q", q, "Landau level index");
    cmd->add_option("--b", b, "magnetic field strength");
    cmd->add_option("--epsilon", epsilon, "sandwich parameter");
    cmd->add_option("--tol", tol, "quadrature tolerance on |delta log|");
    cmd->add_option("--k-max", k_max, "largest angular momentum index");
    cmd->add_option("--threads", threads, "worker threads");
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_grid)
      cmd->add_option("--e-grid", e_grid_text, "energy grid: start,stop,points,log");
  };

  // toeplitz-eigs
  auto* eigs = app.add_subcommand("toeplitz-eigs",
                                  "eigenvalue sequence of a radial multiplier");
  ProfileFlags eigs_profile;
  eigs_profile.attach(eigs);
  add_common(eigs, false);

  // count2d
  auto* count2d = app.add_subcommand("count2d", "2D counting-function sweep");
  ProfileFlags count2d_profile;
  count2d_profile.attach(count2d);
  add_common(count2d, true);

  // count3d
  auto* count3d = app.add_subcommand("count3d", "3D counting-function sweep");
  ProfileFlags count3d_profile;
  PotentialFlags count3d_potential;
  count3d_profile.attach(count3d);
  count3d_potential.attach(count3d);
  add_common(count3d, true);
  count3d->add_option("--n-grid", n_grid, "Nystrom nodes for the 1D solver");
  double delta = 0.0, r_delta = 1.0, big_m = 1.0;
  count3d->add_option("--delta", delta,
                      "envelope width; > 0 squeezes the transverse profile "
                      "between G(mu +- delta) -+ M * disk(r-delta)");
  count3d->add_option("--r-delta", r_delta, "envelope disk radius");
  count3d->add_option("--big-m", big_m, "envelope disk height (>= 1)");

  // schrodinger1d
  auto* dim1 = app.add_subcommand("schrodinger1d",
                                  "negative spectrum of -d^2/dz^2 - g v");
  PotentialFlags dim1_potential;
  dim1_potential.attach(dim1);
  double g = 1.0, energy = 1e-10, g_start = 0.05;
  int g_points = 8;
  bool ground_state = false, weak_coupling = false;
  dim1->add_option("--g", g, "coupling");
  dim1->add_option("--energy", energy, "count eigenvalues below -energy");
  dim1->add_flag("--ground-state", ground_state, "solve the bound-state magnitude");
  dim1->add_flag("--weak-coupling", weak_coupling, "tabulate the weak-coupling ratio");
  dim1->add_option("--g-start", g_start, "first coupling of the halving grid");
  dim1->add_option("--g-points", g_points, "length of the halving grid");
  dim1->add_option("--n-grid", n_grid, "Nystrom nodes");
  dim1->add_option("--out", out_path, "output path (default stdout)");

  // asymptote
  auto* asym = app.add_subcommand("asymptote", "coefficient function and inverse");
  double beta_flag = 1.0, mu_flag = 1.0, kappa = 0.0, k_height = 0.0;
  bool compact = false;
  asym->add_option("--beta", beta_flag, "decay exponent");
  asym->add_option("--mu", mu_flag, "decay rate");
  asym->add_option("--b", b, "magnetic field strength");
  asym->add_flag("--compact-support", compact, "use the compact-support branch");
  asym->add_option("--kappa", kappa, "evaluate the coefficient at kappa");
  asym->add_option("--k", k_height, "invert the coefficient at height k");
  asym->add_option("--out", out_path, "output path (default stdout)");

  // verify / list
  auto* verify = app.add_subcommand("verify",
                                    "run a built-in or file-defined experiment");
  std::string experiment_name, config_path;
  verify->add_option("name", experiment_name, "experiment name");
  verify->add_option("--config", config_path, "experiment spec as a JSON file");
  verify->add_option("--out", out_path, "CSV output path");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--seed", seed, "seed for sampled checks");
  std::vector<std::string> overrides;
  verify->add_option("--set", overrides, "override a parameter, key=value");

  auto* list = app.add_subcommand("list", "list built-in experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list->parsed()) {
      CsvWriter w;
      w.row({"name", "theorem", "parameters"});
      for (const ExperimentSpec& s : builtin_experiments()) {
        std::string params;
        for (const auto& [key, value] : s.parameters) {
          if (!params.empty()) params += ' ';
          params += key + "=" + format_double(value);
        }
        w.row({s.name, s.theorem, params});
      }
      std::cout << w.str();
      return kExitPass;
    }

    if (verify->parsed()) {
      ExperimentSpec spec;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw UsageError("cannot read " + config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        spec = ExperimentSpec::from_json(buffer.str());
      } else if (!experiment_name.empty()) {
        spec = find_builtin(experiment_name);
      } else {
        throw UsageError("verify: pass an experiment name or --config");
      }
      spec.seed = seed;
      spec.output_path = out_path;
      for (const std::string& kv : overrides) {
        const auto pos = kv.find('=');
        if (pos == std::string::npos) throw UsageError("--set expects key=value");
        spec.parameters[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
      }
      Settings settings;
      settings.threads = threads;
      const ExperimentReport report = run_experiment(spec, settings);
      for (const std::string& m : report.messages) std::cout << m << "\n";
      if (out_path.empty()) std::cout << report.csv;
      if (!report.converged) return kExitNonConvergence;
      return report.tolerances_met ? kExitPass : kExitToleranceFailed;
    }

    if (eigs->parsed()) {
      const FieldConfig config(b);
      ToeplitzSpectrum spectrum;
      if (eigs_profile.kind == "gaussian") {
        spectrum = gamma_sequence(q, eigs_profile.build(), config, k_max, tol, threads);
      } else if (eigs_profile.kind == "disk") {
        spectrum = nu_sequence(q, eigs_profile.r, config, k_max, tol, threads);
      } else {
        spectrum = ToeplitzSpectrum{q, config, tol, {}};
        spectrum.eigenvalues.resize(std::size_t(k_max + q) + 1);
        const DecayProfile profile = eigs_profile.build();
        parallel_for_index(spectrum.eigenvalues.size(), threads, [&](std::size_t i) {
          spectrum.eigenvalues[i] =
              toeplitz_eigenvalue(q, int(i) - q, profile, config, tol);
        });
      }
      write_output(format == "csv" ? spectrum_to_csv(spectrum)
                                   : spectrum_to_json(spectrum) + "\n",
                   out_path);
      return kExitPass;
    }

    if (count2d->parsed()) {
      const FieldConfig config(b);
      const auto grid = parse_e_grid(e_grid_text);
      const DecayProfile profile = count2d_profile.build();
      const auto rows = theorem_ratio_2d(q, profile, config, grid, epsilon, tol);
      double mu = 0.0, beta = std::numeric_limits<double>::infinity(), scale, radius;
      if (!profile.as_super_gaussian(mu, beta, scale)) profile.as_disk(radius, scale);
      write_output(format == "csv" ? rows2d_to_csv(rows, q, beta, mu, b)
                                   : rows2d_to_json(rows),
                   out_path);
      for (const auto& r : rows)
        if (!r.tail_certified) return kExitNonConvergence;
      return kExitPass;
    }

    if (count3d->parsed()) {
      const FieldConfig config(b);
      const auto grid = parse_e_grid(e_grid_text);
      const Potential1D v = count3d_potential.build();
      ProfileBracket transverse{count3d_profile.build(), count3d_profile.build()};
      if (delta > 0.0)
        transverse = gaussian_envelope(count3d_profile.mu, count3d_profile.beta,
                                       delta, r_delta, big_m);
      const SeparableBracket3D bracket{transverse.lower, transverse.upper, v, v,
                                       config};
      const auto rows = theorem_ratio_3d(bracket, grid, epsilon, tol, n_grid);
      write_output(format == "csv" ? rows3d_to_csv(rows) : rows3d_to_json(rows),
                   out_path);
      for (const auto& r : rows)
        if (!r.tail_certified) return kExitNonConvergence;
      return kExitPass;
    }

    if (dim1->parsed()) {
      const Potential1D v = dim1_potential.build();
      CsvWriter w;
      if (weak_coupling) {
        std::vector<double> grid;
        double gg = g_start;
        for (int i = 0; i < g_points; ++i, gg *= 0.5) grid.push_back(gg);
        w.row({"g", "g_moment0", "ratio"});
        for (const auto& r : weak_coupling_ratio(grid, v, n_grid))
          w.row({format_double(r.g), format_double(r.g * v.moment0()),
                 format_double(r.ratio)});
      } else if (ground_state) {
        w.row({"g", "energy"});
        w.row({format_double(g), format_double(ground_state_energy(g, v, n_grid))});
      } else {
        w.row({"g", "energy", "count"});
        w.row({format_double(g), format_double(energy),
               std::to_string(bs_count(energy, g, v, n_grid))});
      }
      write_output(w.str(), out_path);
      return kExitPass;
    }

    if (asym->parsed()) {
      const FieldConfig config(b);
      const AsymptoticLaw law = compact ? AsymptoticLaw::compact_support(config)
                                        : AsymptoticLaw(beta_flag, mu_flag, config);
      CsvWriter w;
      if (kappa > 0.0) {
        w.row({"kappa", "coefficient"});
        w.row({format_double(kappa), format_double(coefficient(law, kappa))});
      } else if (k_height > 0.0) {
        const InverseCoefficient inv = coefficient_inverse(law, k_height);
        w.row({"k", "inverse", "surrogate"});
        w.row({format_double(k_height), format_double(inv.value),
               format_double(inv.surrogate)});
      } else {
        throw UsageError("asymptote: pass --kappa or --k");
      }
      write_output(w.str(), out_path);
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuadratureError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  }
  return kExitUsage;
}
