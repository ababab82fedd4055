#include "ltspec/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ltspec/csv.hpp"
#include "ltspec/parallel.hpp"
#include "ltspec/quadrature.hpp"
#include "ltspec/special_functions.hpp"

namespace ltspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double xi_of_radius(double r, double b) { return 0.5 * b * r * r; }
double radius_of_xi(double xi, double b) { return std::sqrt(2.0 * xi / b); }

// Newton solve of lambda beta Xi^beta + Xi = k, the stationary point of the
// weight-times-super-Gaussian integrand; used only as a peak hint.
double gaussian_peak_hint(double k, double lambda, double beta) {
  double xi = std::max(k, 1.0);
  for (int i = 0; i < 60; ++i) {
    const double p = std::pow(xi, beta);
    const double g = lambda * beta * p + xi - k;
    const double dg = lambda * beta * beta * p / xi + 1.0;
    const double step = g / dg;
    xi -= step;
    if (xi <= 0.0) xi = 1e-6;
    if (std::abs(step) < 1e-12 * xi) break;
  }
  return xi;
}

// One nonnegative combination integrated as a single quadrature.
LogValue integrate_profile(int q, int k, const std::vector<DecayProfile::Term>& terms,
                           const FieldConfig& config, double tol) {
  const double b = config.b;
  const double log_norm = log_factorial(q) - log_factorial(k + q);
  LaguerrePoly poly(q, double(k));

  double support_xi = 0.0;
  for (const auto& t : terms)
    support_xi = std::max(support_xi, xi_of_radius(atom_support_radius(t.atom), b));

  std::vector<double> splits = poly.zeros();
  for (const auto& t : terms)
    for (double r : atom_radial_breakpoints(t.atom))
      if (std::isfinite(r)) splits.push_back(xi_of_radius(r, b));

  std::vector<double> log_coeff(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) log_coeff[i] = std::log(terms[i].coeff);

  auto log_f = [&](double xi) -> double {
    const double r = radius_of_xi(xi, b);
    double lf;
    if (terms.size() == 1) {
      lf = log_coeff[0] + atom_log_value(terms[0].atom, r);
    } else {
      lf = -kInf;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const double li = log_coeff[i] + atom_log_value(terms[i].atom, r);
        if (li == -kInf) continue;
        lf = (lf == -kInf) ? li
                           : std::max(lf, li) + std::log1p(std::exp(-std::abs(lf - li)));
      }
    }
    if (lf == -kInf) return -kInf;
    const SignedLog lag = poly.log_value(xi);
    if (lag.sign == 0) return -kInf;
    return log_norm + k * std::log(xi) - xi + 2.0 * lag.log_abs + lf;
  };

  LogQuadratureOptions opt;
  opt.tol = tol;
  double hint = std::max(double(k), 1.0);
  if (terms.size() == 1) {
    if (const auto* sg = std::get_if<DecayProfile::SuperGaussian>(&terms[0].atom)) {
      const double lambda = sg->mu * std::pow(2.0 / b, sg->beta);
      hint = gaussian_peak_hint(std::max(double(k), 1.0), lambda, sg->beta);
    }
  }
  const double hi = std::isfinite(support_xi) && support_xi > 0.0 ? support_xi : kInf;
  if (hi != kInf) hint = std::min(hint, hi * 0.9999);
  opt.peak_hint = hint;

  const LogQuadrature result = integrate_exp_log(log_f, 0.0, hi, splits, opt);
  if (!result.converged) {
    const LogValue low = LogValue::from_log(result.value.sign,
                                            result.value.log_mag - result.log_error);
    const LogValue high = LogValue::from_log(result.value.sign,
                                             result.value.log_mag + result.log_error);
    throw QuadratureError("toeplitz_eigenvalue: quadrature did not converge", low, high);
  }
  return result.value;
}

}  // namespace

LogValue toeplitz_eigenvalue(int q, int k, const DecayProfile& profile,
                             const FieldConfig& config, double tol) {
  if (q < 0 || q > kMaxLaguerreDegree)
    throw std::invalid_argument("toeplitz_eigenvalue: q outside [0, 32]");
  if (k < -q) throw std::invalid_argument("toeplitz_eigenvalue: need k >= -q");
  if (profile.terms().empty()) return LogValue::zero();

  if (profile.all_coefficients_positive())
    return integrate_profile(q, k, profile.terms(), config, tol);

  // Signed combination: evaluate atom by atom and combine linearly.
  LogValue sum = LogValue::zero();
  for (const auto& term : profile.terms()) {
    const LogValue atom_eig =
        integrate_profile(q, k, {{std::abs(term.coeff), term.atom}}, config, tol);
    sum += (term.coeff < 0.0) ? -atom_eig : atom_eig;
  }
  return sum;
}

ToeplitzSpectrum gamma_sequence(int q, const DecayProfile& profile,
                                const FieldConfig& config, int k_max,
                                double tol, int threads) {
  double mu, beta, scale;
  if (!profile.as_super_gaussian(mu, beta, scale))
    throw std::invalid_argument("gamma_sequence: profile must be a single super-Gaussian");
  if (k_max < 1) throw std::invalid_argument("gamma_sequence: need k_max >= 1");

  ToeplitzSpectrum s{q, config, tol, {}};
  s.eigenvalues.resize(std::size_t(k_max + q) + 1);
  parallel_for_index(s.eigenvalues.size(), threads, [&](std::size_t i) {
    s.eigenvalues[i] = toeplitz_eigenvalue(q, int(i) - q, profile, config, tol);
  });
  return s;
}

ToeplitzSpectrum nu_sequence(int q, double r, const FieldConfig& config,
                             int k_max, double tol, int threads) {
  if (!(r > 0.0)) throw std::invalid_argument("nu_sequence: need r > 0");
  ToeplitzSpectrum s{q, config, tol, {}};
  s.eigenvalues.resize(std::size_t(k_max + q) + 1);
  if (q == 0) {
    const double x = 0.5 * config.b * r * r;
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
      s.eigenvalues[i] = log_reg_inc_gamma_lower(double(i) + 1.0, x);
    return s;
  }
  const DecayProfile disk = DecayProfile::disk(r);
  parallel_for_index(s.eigenvalues.size(), threads, [&](std::size_t i) {
    s.eigenvalues[i] = toeplitz_eigenvalue(q, int(i) - q, disk, config, tol);
  });
  return s;
}

std::pair<LogValue, LogValue> dominating_bracket(int q,
                                                 const DecayProfile& lower,
                                                 const DecayProfile& upper,
                                                 const FieldConfig& config,
                                                 int k, double tol) {
  return {toeplitz_eigenvalue(q, k, lower, config, tol),
          toeplitz_eigenvalue(q, k, upper, config, tol)};
}

std::string spectrum_to_csv(const ToeplitzSpectrum& s) {
  CsvWriter w;
  w.row({"q", "b", "k", "sign", "log_eig", "tol"});
  for (int k = s.k_min(); k <= s.k_max(); ++k) {
    const LogValue& v = s.at(k);
    w.row({std::to_string(s.q), format_double(s.config.b), std::to_string(k),
           std::to_string(v.sign), format_double(v.log_mag),
           format_double(s.quad_tolerance)});
  }
  return w.str();
}

ToeplitzSpectrum spectrum_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("spectrum_from_csv: empty input");
  struct Row {
    int q, k, sign;
    double b, log_eig, tol;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = csv_split(line);
    if (f.size() != 6) throw std::runtime_error("spectrum_from_csv: bad row");
    rows.push_back({std::stoi(f[0]), std::stoi(f[2]), std::stoi(f[3]),
                    std::stod(f[1]), std::stod(f[4]), std::stod(f[5])});
  }
  if (rows.empty()) throw std::runtime_error("spectrum_from_csv: no rows");
  ToeplitzSpectrum s{rows[0].q, FieldConfig(rows[0].b), rows[0].tol, {}};
  s.eigenvalues.reserve(rows.size());
  int expect = -rows[0].q;
  for (const Row& r : rows) {
    if (r.k != expect++)
      throw std::runtime_error("spectrum_from_csv: entries must be contiguous from -q");
    s.eigenvalues.push_back(LogValue::from_log(r.sign, r.log_eig));
  }
  return s;
}

std::string spectrum_to_json(const ToeplitzSpectrum& s) {
  nlohmann::json j;
  j["q"] = s.q;
  j["b"] = s.config.b;
  j["tol"] = s.quad_tolerance;
  nlohmann::json entries = nlohmann::json::array();
  for (int k = s.k_min(); k <= s.k_max(); ++k) {
    const LogValue& v = s.at(k);
    entries.push_back({{"k", k}, {"sign", v.sign}, {"log", v.log_mag}});
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

ToeplitzSpectrum spectrum_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  ToeplitzSpectrum s{j.at("q").get<int>(), FieldConfig(j.at("b").get<double>()),
                     j.at("tol").get<double>(), {}};
  int expect = -s.q;
  for (const auto& e : j.at("entries")) {
    if (e.at("k").get<int>() != expect++)
      throw std::runtime_error("spectrum_from_json: entries must be contiguous from -q");
    s.eigenvalues.push_back(
        LogValue::from_log(e.at("sign").get<int>(), e.at("log").get<double>()));
  }
  return s;
}

}  // namespace ltspec
