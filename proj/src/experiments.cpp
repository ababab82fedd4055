#include "ltspec/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "ltspec/counting2d.hpp"
#include "ltspec/csv.hpp"
#include "ltspec/dim3.hpp"
#include "ltspec/parallel.hpp"
#include "ltspec/schrodinger1d.hpp"
#include "ltspec/special_functions.hpp"
#include "ltspec/toeplitz.hpp"
#include "ltspec/version.hpp"

namespace ltspec {

double ExperimentSpec::param(const std::string& key) const {
  const auto it = parameters.find(key);
  if (it == parameters.end())
    throw UsageError("experiment '" + name + "': missing parameter '" + key + "'");
  return it->second;
}

double ExperimentSpec::param_or(const std::string& key, double fallback) const {
  const auto it = parameters.find(key);
  return it == parameters.end() ? fallback : it->second;
}

std::string ExperimentSpec::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["name"] = name;
  j["theorem"] = theorem;
  j["parameters"] = parameters;
  j["output_path"] = output_path;
  j["seed"] = seed;
  return j.dump(2);
}

ExperimentSpec ExperimentSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("experiment spec: invalid JSON: ") + e.what());
  }
  ExperimentSpec s;
  s.name = j.at("name").get<std::string>();
  s.theorem = j.at("theorem").get<std::string>();
  if (j.contains("parameters"))
    s.parameters = j.at("parameters").get<std::map<std::string, double>>();
  if (j.contains("output_path")) s.output_path = j.at("output_path").get<std::string>();
  if (j.contains("seed")) s.seed = j.at("seed").get<long>();
  return s;
}

double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares_slope: need matched samples");
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= double(x.size());
  ym /= double(x.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - xm) * (y[i] - ym);
    den += (x[i] - xm) * (x[i] - xm);
  }
  return num / den;
}

std::vector<double> log_grid(double start, double stop, int points) {
  if (!(start > 0.0) || !(stop > 0.0) || points < 1)
    throw UsageError("log grid: start, stop must be > 0 and points >= 1");
  if (!(stop < start)) throw UsageError("log grid: grids run downward (stop < start)");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = start;
    return g;
  }
  const double la = std::log(start), lb = std::log(stop);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(la + (lb - la) * i / double(points - 1));
  return g;
}

namespace {

std::string pass_line(bool ok, const std::string& what) {
  return std::string(ok ? "pass: " : "FAIL: ") + what;
}

std::string fmt(double v) { return format_double(v); }

// ---- family pipelines ------------------------------------------------

ExperimentReport run_p31(const ExperimentSpec& spec, const Settings& st) {
  const int q_max = int(spec.param_or("q_max", 2));
  const double mu = spec.param_or("mu", 1.0);
  const FieldConfig config(spec.param_or("b", 1.0));
  const int k_lo = int(spec.param_or("k_lo", 256));
  const int k_hi = int(spec.param_or("k_max", 4096));
  const double tol = spec.param_or("tol", st.quad_tol);
  const double window_low_beta = spec.param_or("window_low_beta", 0.05);
  const double window_beta2 = spec.param_or("window_beta2", 0.2);
  if (k_lo >= k_hi) throw UsageError("toeplitz-gaussian-decay: need k_lo < k_max");

  const std::vector<double> betas{0.5, 1.0, 2.0};
  struct Row {
    int q;
    double beta, k, log_eig, normalizer, ratio;
  };
  std::vector<Row> rows;
  ExperimentReport report;
  report.name = spec.name;
  bool all_ok = true;

  std::vector<int> ks{k_lo, k_hi};
  for (int q = 0; q <= q_max; ++q) {
    for (double beta : betas) {
      const DecayProfile profile = DecayProfile::super_gaussian(mu, beta);
      const AsymptoticLaw law(beta, mu, config);
      double deviation_lo = 0.0, deviation_hi = 0.0;
      for (int k : ks) {
        const LogValue eig = toeplitz_eigenvalue(q, k, profile, config, tol);
        const InverseCoefficient inv = coefficient_inverse(law, double(k));
        // the k ln k surrogate is the normalization the decay statements
        // are quoted against for beta > 1; below that the inverse is exact
        const double normalizer = beta > 1.0 ? inv.surrogate : inv.value;
        const double ratio = eig.log_mag / normalizer;
        rows.push_back({q, beta, double(k), eig.log_mag, normalizer, ratio});
        (k == k_lo ? deviation_lo : deviation_hi) = std::abs(ratio + 1.0);
      }
      const double window = beta > 1.0 ? window_beta2 : window_low_beta;
      const bool in_window = deviation_hi <= window;
      const bool improves = deviation_hi < deviation_lo;
      all_ok = all_ok && in_window && improves;
      report.messages.push_back(pass_line(
          in_window && improves,
          "q=" + std::to_string(q) + " beta=" + fmt(beta) + ": |ratio+1| " +
              fmt(deviation_lo) + " -> " + fmt(deviation_hi) + " (window " +
              fmt(window) + ")"));
    }
  }

  CsvWriter w;
  w.row({"q", "beta", "mu", "b", "k", "log_eig", "normalizer", "ratio"});
  for (const Row& r : rows)
    w.row({std::to_string(r.q), fmt(r.beta), fmt(mu), fmt(config.b), fmt(r.k),
           fmt(r.log_eig), fmt(r.normalizer), fmt(r.ratio)});
  report.csv = w.str();
  report.tolerances_met = all_ok;
  return report;
}

ExperimentReport run_p32(const ExperimentSpec& spec, const Settings& st) {
  const int q_max = int(spec.param_or("q_max", 2));
  const FieldConfig config(spec.param_or("b", 1.0));
  const int k_lo = int(spec.param_or("k_lo", 256));
  const int k_hi = int(spec.param_or("k_max", 4096));
  const double tol = spec.param_or("tol", st.quad_tol);
  const double window_lo = spec.param_or("window_lo", -1.15);
  const double window_hi = spec.param_or("window_hi", -0.85);
  const std::vector<double> radii{spec.param_or("r1", 0.5), spec.param_or("r2", 2.0)};

  ExperimentReport report;
  report.name = spec.name;
  bool all_ok = true;
  CsvWriter w;
  w.row({"q", "r", "b", "k", "log_eig", "k_ln_k", "ratio"});

  for (int q = 0; q <= q_max; ++q) {
    for (double r : radii) {
      double deviation_lo = 0.0, deviation_hi = 0.0, final_ratio = 0.0;
      for (int k : {k_lo, k_hi}) {
        LogValue eig;
        if (q == 0) {
          eig = log_reg_inc_gamma_lower(double(k) + 1.0, 0.5 * config.b * r * r);
        } else {
          eig = toeplitz_eigenvalue(q, k, DecayProfile::disk(r), config, tol);
        }
        const double normalizer = double(k) * std::log(double(k));
        const double ratio = eig.log_mag / normalizer;
        w.row({std::to_string(q), fmt(r), fmt(config.b), std::to_string(k),
               fmt(eig.log_mag), fmt(normalizer), fmt(ratio)});
        (k == k_lo ? deviation_lo : deviation_hi) = std::abs(ratio + 1.0);
        if (k == k_hi) final_ratio = ratio;
      }
      const bool in_window = final_ratio >= window_lo && final_ratio <= window_hi;
      const bool improves = deviation_hi < deviation_lo;
      all_ok = all_ok && in_window && improves;
      report.messages.push_back(pass_line(
          in_window && improves,
          "q=" + std::to_string(q) + " r=" + fmt(r) + ": ratio " +
              fmt(final_ratio) + " in [" + fmt(window_lo) + ", " + fmt(window_hi) +
              "], |ratio+1| " + fmt(deviation_lo) + " -> " + fmt(deviation_hi)));
    }
  }
  report.csv = w.str();
  report.tolerances_met = all_ok;
  return report;
}

void append_ratio2d_rows(CsvWriter& w, const std::vector<RatioRow2D>& rows,
                         int q, double beta, double mu, double b) {
  for (const RatioRow2D& r : rows)
    w.row({fmt(r.E), fmt(r.abs_log_E), std::to_string(r.lower),
           std::to_string(r.upper), fmt(r.coefficient_value), fmt(r.ratio_lower),
           fmt(r.ratio_upper), fmt(r.epsilon), r.tail_certified ? "true" : "false",
           std::to_string(q), fmt(beta), fmt(mu), fmt(b)});
}

const std::vector<std::string> kRatio2DHeader{
    "E",           "abs_log_E",   "lower",       "upper",
    "coefficient_value", "ratio_lower", "ratio_upper", "epsilon",
    "tail_certified",    "q",           "beta",        "mu",
    "b"};

struct TrendCheck {
  bool in_window = false;
  bool shrinking = false;
  double final_mid = 0.0;
  double slope = 0.0;
};

template <typename Row>
TrendCheck check_window_and_trend(const std::vector<Row>& rows, double window_lo,
                                  double window_hi,
                                  double (Row::*abs_log_member)) {
  TrendCheck c;
  std::vector<double> xs, ds;
  for (const Row& r : rows) {
    const double mid = 0.5 * (r.ratio_lower + r.ratio_upper);
    xs.push_back(r.*abs_log_member);
    ds.push_back(std::abs(mid - 1.0));
  }
  const Row& last = rows.back();
  c.final_mid = 0.5 * (last.ratio_lower + last.ratio_upper);
  c.in_window = last.ratio_lower >= window_lo && last.ratio_lower <= window_hi &&
                last.ratio_upper >= window_lo && last.ratio_upper <= window_hi;
  c.slope = least_squares_slope(xs, ds);
  c.shrinking = c.slope <= 1e-9;  // tolerate float noise around a flat trend
  return c;
}

ExperimentReport run_t21(const ExperimentSpec& spec, const Settings& st) {
  const FieldConfig config(spec.param_or("b", 1.0));
  const double mu = spec.param_or("mu", 0.5);
  const double beta = spec.param_or("beta", 1.0);
  const int q_max = int(spec.param_or("q_max", 1));
  const double epsilon = spec.param_or("epsilon", st.epsilon);
  const double tol = spec.param_or("tol", st.quad_tol);
  const double window_lo = spec.param_or("window_lo", 0.85);
  const double window_hi = spec.param_or("window_hi", 1.15);
  const std::vector<double> grid =
      log_grid(spec.param_or("e_start", 1e-4), spec.param_or("e_stop", 1e-12),
               int(spec.param_or("e_points", 5)));

  ExperimentReport report;
  report.name = spec.name;
  bool all_ok = true;
  CsvWriter w;
  w.row(kRatio2DHeader);
  const DecayProfile profile = DecayProfile::super_gaussian(mu, beta);
  for (int q = 0; q <= q_max; ++q) {
    const auto rows = theorem_ratio_2d(q, profile, config, grid, epsilon, tol);
    append_ratio2d_rows(w, rows, q, beta, mu, config.b);
    for (const auto& r : rows) report.converged = report.converged && r.tail_certified;
    const TrendCheck c = check_window_and_trend(rows, window_lo, window_hi,
                                                &RatioRow2D::abs_log_E);
    all_ok = all_ok && c.in_window && c.shrinking;
    report.messages.push_back(pass_line(
        c.in_window && c.shrinking,
        "q=" + std::to_string(q) + ": final ratio " + fmt(c.final_mid) +
            " in [" + fmt(window_lo) + ", " + fmt(window_hi) + "], trend slope " +
            fmt(c.slope)));
  }
  report.csv = w.str();
  report.tolerances_met = all_ok;
  return report;
}

ExperimentReport run_t21_mu_independence(const ExperimentSpec& spec,
                                         const Settings& st) {
  const FieldConfig config(spec.param_or("b", 1.0));
  const double beta = spec.param_or("beta", 2.0);
  const int q = int(spec.param_or("q", 0));
  const double epsilon = spec.param_or("epsilon", st.epsilon);
  const double tol = spec.param_or("tol", st.quad_tol);
  const double max_difference = spec.param_or("max_difference", 0.05);
  const std::vector<double> grid =
      log_grid(spec.param_or("e_start", 1e-4), spec.param_or("e_stop", 1e-12),
               int(spec.param_or("e_points", 5)));
  const std::vector<double> mus{spec.param_or("mu", 0.5), spec.param_or("mu_alt", 2.0)};

  ExperimentReport report;
  report.name = spec.name;
  CsvWriter w;
  w.row(kRatio2DHeader);
  std::vector<double> final_mid;
  for (double mu : mus) {
    const auto rows = theorem_ratio_2d(q, DecayProfile::super_gaussian(mu, beta),
                                       config, grid, epsilon, tol);
    append_ratio2d_rows(w, rows, q, beta, mu, config.b);
    for (const auto& r : rows) report.converged = report.converged && r.tail_certified;
    final_mid.push_back(0.5 * (rows.back().ratio_lower + rows.back().ratio_upper));
  }
  const double difference = std::abs(final_mid[0] - final_mid[1]);
  report.tolerances_met = difference <= max_difference;
  report.messages.push_back(pass_line(
      report.tolerances_met,
      "final ratios " + fmt(final_mid[0]) + " vs " + fmt(final_mid[1]) +
          ", difference " + fmt(difference) + " (allowed " + fmt(max_difference) + ")"));
  report.csv = w.str();
  return report;
}

ExperimentReport run_t23(const ExperimentSpec& spec, const Settings& st) {
  const FieldConfig config(spec.param_or("b", 1.0));
  const double r = spec.param_or("r", 1.0);
  const int q = int(spec.param_or("q", 0));
  const double epsilon = spec.param_or("epsilon", st.epsilon);
  const double tol = spec.param_or("tol", st.quad_tol);
  const double window_lo = spec.param_or("window_lo", 0.6);
  const double window_hi = spec.param_or("window_hi", 1.4);
  const std::vector<double> grid =
      log_grid(spec.param_or("e_start", 1e-4), spec.param_or("e_stop", 1e-12),
               int(spec.param_or("e_points", 5)));

  ExperimentReport report;
  report.name = spec.name;
  const auto rows =
      theorem_ratio_2d(q, DecayProfile::disk(r), config, grid, epsilon, tol);
  CsvWriter w;
  w.row(kRatio2DHeader);
  append_ratio2d_rows(w, rows, q, std::numeric_limits<double>::infinity(), 0.0,
                      config.b);
  for (const auto& row : rows) report.converged = report.converged && row.tail_certified;
  const TrendCheck c =
      check_window_and_trend(rows, window_lo, window_hi, &RatioRow2D::abs_log_E);
  report.tolerances_met = c.in_window && c.shrinking;
  report.messages.push_back(pass_line(
      report.tolerances_met,
      "final ratio " + fmt(c.final_mid) + " in [" + fmt(window_lo) + ", " +
          fmt(window_hi) + "], trend slope " + fmt(c.slope) +
          " (the kappa/ln kappa normalization converges only logarithmically)"));
  report.csv = w.str();
  return report;
}

const std::vector<std::string> kRatio3DHeader{
    "E",         "abs_log_sqrtE", "lower",       "upper",
    "coefficient_value", "ratio_lower",   "ratio_upper", "channels_used",
    "epsilon",           "tail_certified"};

ExperimentReport run_t25_t26(const ExperimentSpec& spec, const Settings& st,
                             bool disk_transverse) {
  const FieldConfig config(spec.param_or("b", 1.0));
  const double epsilon = spec.param_or("epsilon", st.epsilon);
  const double tol = spec.param_or("tol", st.quad_tol);
  const int n_grid = int(spec.param_or("n_grid", st.n_grid));
  const double window_lo = spec.param_or("window_lo", disk_transverse ? 0.5 : 0.8);
  const double window_hi = spec.param_or("window_hi", disk_transverse ? 1.5 : 1.2);
  const std::vector<double> grid =
      log_grid(spec.param_or("e_start", 1e-6), spec.param_or("e_stop", 1e-16),
               int(spec.param_or("e_points", 6)));

  const DecayProfile transverse =
      disk_transverse
          ? DecayProfile::disk(spec.param_or("r", 1.0))
          : DecayProfile::super_gaussian(spec.param_or("mu", 0.5),
                                         spec.param_or("beta", 1.0));
  const Potential1D well = Potential1D::square_well(spec.param_or("v_half_width", 1.0));
  const SeparableBracket3D bracket{transverse, transverse, well, well, config};

  ExperimentReport report;
  report.name = spec.name;
  const auto rows = theorem_ratio_3d(bracket, grid, epsilon, tol, n_grid);
  CsvWriter w;
  w.row(kRatio3DHeader);
  for (const auto& r : rows) {
    w.row({fmt(r.E), fmt(r.abs_log_sqrt_E), std::to_string(r.lower),
           std::to_string(r.upper), fmt(r.coefficient_value), fmt(r.ratio_lower),
           fmt(r.ratio_upper), std::to_string(r.channels_used), fmt(r.epsilon),
           r.tail_certified ? "true" : "false"});
    report.converged = report.converged && r.tail_certified;
  }
  const TrendCheck c = check_window_and_trend(rows, window_lo, window_hi,
                                              &RatioRow3D::abs_log_sqrt_E);
  report.tolerances_met = c.in_window && c.shrinking;
  report.messages.push_back(pass_line(
      report.tolerances_met, "final ratio " + fmt(c.final_mid) + " in [" +
                                 fmt(window_lo) + ", " + fmt(window_hi) +
                                 "], trend slope " + fmt(c.slope)));
  report.csv = w.str();
  return report;
}

ExperimentReport run_l52(const ExperimentSpec& spec, const Settings& st) {
  const int n_grid = int(spec.param_or("n_grid", st.n_grid));
  const double window = spec.param_or("window", 0.02);
  const double target_mass = spec.param_or("g_min_mass", 1e-3);

  struct Shape {
    std::string name;
    Potential1D v;
  };
  const std::vector<Shape> shapes{
      {"square_well", Potential1D::square_well(spec.param_or("v_half_width", 1.0))},
      {"gaussian", Potential1D::gaussian(spec.param_or("v_sigma", 1.0))}};

  ExperimentReport report;
  report.name = spec.name;
  bool all_ok = true;
  CsvWriter w;
  w.row({"shape", "g", "g_moment0", "sqrt_energy", "ratio"});
  for (const Shape& shape : shapes) {
    // halve g until g * moment0 reaches the target mass
    std::vector<double> grid;
    double g = spec.param_or("g_start", 0.128) / shape.v.moment0();
    while (g * shape.v.moment0() > target_mass / 2.0) {
      grid.push_back(g);
      g *= 0.5;
    }
    const auto rows = weak_coupling_ratio(grid, shape.v, n_grid);
    double final_ratio = 0.0;
    for (const auto& r : rows) {
      const double root = r.ratio * 0.5 * r.g * shape.v.moment0();
      w.row({shape.name, fmt(r.g), fmt(r.g * shape.v.moment0()), fmt(root),
             fmt(r.ratio)});
      if (r.g * shape.v.moment0() <= target_mass) {
        final_ratio = r.ratio;
        break;
      }
      final_ratio = r.ratio;
    }
    const bool ok = std::abs(final_ratio - 1.0) <= window;
    all_ok = all_ok && ok;
    report.messages.push_back(pass_line(
        ok, shape.name + ": weak-coupling ratio " + fmt(final_ratio) +
                " within " + fmt(window) + " of 1"));
  }
  report.csv = w.str();
  report.tolerances_met = all_ok;
  return report;
}

}  // namespace

const std::vector<ExperimentSpec>& builtin_experiments() {
  static const std::vector<ExperimentSpec> catalog = [] {
    std::vector<ExperimentSpec> v;
    v.push_back({"toeplitz-gaussian-decay",
                 "P3.1",
                 {{"q_max", 2}, {"mu", 1.0}, {"b", 1.0}, {"k_lo", 256},
                  {"k_max", 4096}, {"window_low_beta", 0.05}, {"window_beta2", 0.2}},
                 "",
                 0});
    v.push_back({"toeplitz-disk-decay",
                 "P3.2",
                 {{"q_max", 2}, {"b", 1.0}, {"r1", 0.5}, {"r2", 2.0},
                  {"k_lo", 256}, {"k_max", 4096}, {"window_lo", -1.15},
                  {"window_hi", -0.85}},
                 "",
                 0});
    v.push_back({"count2d-gaussian",
                 "T2.1",
                 {{"q_max", 1}, {"mu", 0.5}, {"beta", 1.0}, {"b", 1.0},
                  {"epsilon", 0.01}, {"e_start", 1e-4}, {"e_stop", 1e-12},
                  {"e_points", 5}, {"window_lo", 0.85}, {"window_hi", 1.15}},
                 "",
                 0});
    v.push_back({"count2d-mu-independence",
                 "T2.1",
                 {{"q", 0}, {"beta", 2.0}, {"mu", 0.5}, {"mu_alt", 2.0},
                  {"b", 1.0}, {"epsilon", 0.01}, {"e_start", 1e-4},
                  {"e_stop", 1e-12}, {"e_points", 5}, {"max_difference", 0.05}},
                 "",
                 0});
    v.push_back({"count2d-disk",
                 "T2.3",
                 {{"q", 0}, {"r", 1.0}, {"b", 1.0}, {"epsilon", 0.01},
                  {"e_start", 1e-4}, {"e_stop", 1e-12}, {"e_points", 5},
                  {"window_lo", 0.6}, {"window_hi", 1.4}},
                 "",
                 0});
    v.push_back({"count3d-gaussian",
                 "T2.5",
                 {{"mu", 0.5}, {"beta", 1.0}, {"b", 1.0}, {"v_half_width", 1.0},
                  {"epsilon", 0.01}, {"e_start", 1e-6}, {"e_stop", 1e-16},
                  {"e_points", 6}, {"window_lo", 0.8}, {"window_hi", 1.2},
                  {"n_grid", 512}},
                 "",
                 0});
    v.push_back({"count3d-disk",
                 "T2.6",
                 {{"r", 1.0}, {"b", 1.0}, {"v_half_width", 1.0}, {"epsilon", 0.01},
                  {"e_start", 1e-6}, {"e_stop", 1e-16}, {"e_points", 6},
                  {"window_lo", 0.5}, {"window_hi", 1.5}, {"n_grid", 512}},
                 "",
                 0});
    v.push_back({"weak-coupling-1d",
                 "L5.2",
                 {{"v_half_width", 1.0}, {"v_sigma", 1.0}, {"g_start", 0.128},
                  {"g_min_mass", 1e-3}, {"window", 0.02}, {"n_grid", 512}},
                 "",
                 0});
    return v;
  }();
  return catalog;
}

ExperimentSpec find_builtin(const std::string& name) {
  for (const ExperimentSpec& s : builtin_experiments())
    if (s.name == name) return s;
  throw UsageError("unknown experiment '" + name + "' (see `list`)");
}

ExperimentReport run_experiment(const ExperimentSpec& spec,
                                const Settings& settings) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport report;
  if (spec.theorem == "P3.1") {
    report = run_p31(spec, settings);
  } else if (spec.theorem == "P3.2") {
    report = run_p32(spec, settings);
  } else if (spec.theorem == "T2.1") {
    report = spec.parameters.count("mu_alt") ? run_t21_mu_independence(spec, settings)
                                             : run_t21(spec, settings);
  } else if (spec.theorem == "T2.3") {
    report = run_t23(spec, settings);
  } else if (spec.theorem == "T2.5") {
    report = run_t25_t26(spec, settings, false);
  } else if (spec.theorem == "T2.6") {
    report = run_t25_t26(spec, settings, true);
  } else if (spec.theorem == "L5.2") {
    report = run_l52(spec, settings);
  } else {
    throw UsageError("unknown theorem family '" + spec.theorem + "'");
  }
  const auto t1 = std::chrono::steady_clock::now();
  report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (!spec.output_path.empty()) {
    std::ofstream csv(spec.output_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + spec.output_path);
    csv << report.csv;

    nlohmann::json sidecar;
    sidecar["schema"] = 1;
    sidecar["name"] = spec.name;
    sidecar["theorem"] = spec.theorem;
    sidecar["parameters"] = spec.parameters;
    sidecar["seed"] = spec.seed;
    sidecar["defaults"] = {{"epsilon", settings.epsilon},
                           {"quad_tol", settings.quad_tol},
                           {"k_budget", settings.k_budget},
                           {"n_grid", settings.n_grid},
                           {"threads", settings.threads}};
    sidecar["revision"] = kRevision;
    sidecar["wall_ms"] = report.wall_ms;
    sidecar["tolerances_met"] = report.tolerances_met;
    sidecar["converged"] = report.converged;
    sidecar["messages"] = report.messages;
    std::ofstream js(spec.output_path + ".json", std::ios::binary);
    if (!js) throw std::runtime_error("cannot write " + spec.output_path + ".json");
    js << sidecar.dump(2) << "\n";
  }
  return report;
}

}  // namespace ltspec
