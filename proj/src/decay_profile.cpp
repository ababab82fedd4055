#include "ltspec/decay_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ltspec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DecayProfile DecayProfile::super_gaussian(double mu, double beta) {
  if (!(mu > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("DecayProfile: super-Gaussian needs mu, beta > 0");
  DecayProfile p;
  p.terms_.push_back({1.0, SuperGaussian{mu, beta}});
  return p;
}

DecayProfile DecayProfile::disk(double radius, double center_offset) {
  if (!(radius > 0.0) || center_offset < 0.0)
    throw std::invalid_argument("DecayProfile: disk needs radius > 0, offset >= 0");
  DecayProfile p;
  p.terms_.push_back({1.0, Disk{radius, center_offset}});
  return p;
}

DecayProfile DecayProfile::power_law(double alpha, double inner_cutoff) {
  if (!(alpha > 0.0) || !(inner_cutoff > 0.0))
    throw std::invalid_argument("DecayProfile: power law needs alpha, cutoff > 0");
  DecayProfile p;
  p.terms_.push_back({1.0, PowerLaw{alpha, inner_cutoff}});
  return p;
}

DecayProfile DecayProfile::tabulated(std::vector<double> radius,
                                     std::vector<double> value) {
  if (radius.size() != value.size() || radius.size() < 2)
    throw std::invalid_argument("DecayProfile: tabulated needs >= 2 matched samples");
  for (std::size_t i = 0; i < radius.size(); ++i) {
    if (i > 0 && !(radius[i] > radius[i - 1]))
      throw std::invalid_argument("DecayProfile: tabulated radii must increase");
    if (!(value[i] >= 0.0))
      throw std::invalid_argument("DecayProfile: tabulated values must be >= 0");
    if (i > 0 && value[i] > value[i - 1])
      throw std::invalid_argument("DecayProfile: tabulated values must not increase");
  }
  if (!(radius.front() >= 0.0))
    throw std::invalid_argument("DecayProfile: tabulated radii must be >= 0");
  DecayProfile p;
  p.terms_.push_back({1.0, Tabulated{std::move(radius), std::move(value)}});
  return p;
}

DecayProfile DecayProfile::scaled(double c, const DecayProfile& p) {
  if (!(c > 0.0)) throw std::invalid_argument("DecayProfile: scale must be > 0");
  DecayProfile out = p;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

DecayProfile DecayProfile::sum(const DecayProfile& a, const DecayProfile& b) {
  DecayProfile out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

DecayProfile DecayProfile::difference(const DecayProfile& a,
                                      const DecayProfile& b) {
  DecayProfile out = a;
  for (Term t : b.terms_) {
    t.coeff = -t.coeff;
    out.terms_.push_back(t);
  }
  return out;
}

bool DecayProfile::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff > 0.0; });
}

double DecayProfile::value(double radius) const {
  double v = 0.0;
  for (const Term& t : terms_) v += t.coeff * atom_value(t.atom, radius);
  return v;
}

double DecayProfile::sup_value() const {
  if (all_coefficients_positive()) return value(0.0);
  double sup = 0.0;
  for (const Term& t : terms_)
    if (t.coeff > 0.0) sup += t.coeff * atom_sup(t.atom);
  return sup;
}

bool DecayProfile::as_super_gaussian(double& mu, double& beta,
                                     double& scale) const {
  if (terms_.size() != 1) return false;
  const auto* sg = std::get_if<SuperGaussian>(&terms_[0].atom);
  if (!sg) return false;
  mu = sg->mu;
  beta = sg->beta;
  scale = terms_[0].coeff;
  return true;
}

bool DecayProfile::as_disk(double& radius, double& scale) const {
  if (terms_.size() != 1) return false;
  const auto* d = std::get_if<Disk>(&terms_[0].atom);
  if (!d) return false;
  radius = d->radius;
  scale = terms_[0].coeff;
  return true;
}

double atom_value(const DecayProfile::Atom& atom, double radius) {
  const double lv = atom_log_value(atom, radius);
  return (lv == -kInf) ? 0.0 : std::exp(lv);
}

double atom_log_value(const DecayProfile::Atom& atom, double radius) {
  struct Visitor {
    double r;
    double operator()(const DecayProfile::SuperGaussian& a) const {
      return -a.mu * std::pow(r, 2.0 * a.beta);
    }
    double operator()(const DecayProfile::Disk& a) const {
      return r < a.radius ? 0.0 : -kInf;
    }
    double operator()(const DecayProfile::PowerLaw& a) const {
      return -a.alpha * std::log(std::max(r, a.inner_cutoff));
    }
    double operator()(const DecayProfile::Tabulated& a) const {
      if (r >= a.radius.back())
        return -kInf;
      if (r <= a.radius.front())
        return a.value.front() > 0.0 ? std::log(a.value.front()) : -kInf;
      const auto it = std::upper_bound(a.radius.begin(), a.radius.end(), r);
      const std::size_t i = std::size_t(it - a.radius.begin());
      const double t = (r - a.radius[i - 1]) / (a.radius[i] - a.radius[i - 1]);
      const double v = a.value[i - 1] + t * (a.value[i] - a.value[i - 1]);
      return v > 0.0 ? std::log(v) : -kInf;
    }
  };
  return std::visit(Visitor{radius}, atom);
}

double atom_sup(const DecayProfile::Atom& atom) {
  return atom_value(atom, 0.0);
}

std::vector<double> atom_radial_breakpoints(const DecayProfile::Atom& atom) {
  struct Visitor {
    std::vector<double> operator()(const DecayProfile::SuperGaussian&) const {
      return {};
    }
    std::vector<double> operator()(const DecayProfile::Disk& a) const {
      return {a.radius};
    }
    std::vector<double> operator()(const DecayProfile::PowerLaw& a) const {
      return {a.inner_cutoff};
    }
    std::vector<double> operator()(const DecayProfile::Tabulated& a) const {
      return a.radius;
    }
  };
  return std::visit(Visitor{}, atom);
}

double atom_support_radius(const DecayProfile::Atom& atom) {
  struct Visitor {
    double operator()(const DecayProfile::SuperGaussian&) const { return kInf; }
    double operator()(const DecayProfile::Disk& a) const { return a.radius; }
    double operator()(const DecayProfile::PowerLaw&) const { return kInf; }
    double operator()(const DecayProfile::Tabulated& a) const {
      return a.radius.back();
    }
  };
  return std::visit(Visitor{}, atom);
}

double atom_super_level_radius(const DecayProfile::Atom& atom, double level) {
  if (!(level > 0.0))
    throw std::invalid_argument("atom_super_level_radius: level must be > 0");
  struct Visitor {
    double level;
    double operator()(const DecayProfile::SuperGaussian& a) const {
      if (level >= 1.0) return 0.0;
      return std::pow(-std::log(level) / a.mu, 0.5 / a.beta);
    }
    double operator()(const DecayProfile::Disk& a) const {
      return level < 1.0 ? a.radius : 0.0;
    }
    double operator()(const DecayProfile::PowerLaw& a) const {
      if (level >= std::pow(a.inner_cutoff, -a.alpha)) return 0.0;
      return std::pow(level, -1.0 / a.alpha);
    }
    double operator()(const DecayProfile::Tabulated& a) const {
      if (level >= a.value.front()) return 0.0;
      // first sample at or below the level; linear inverse on that segment
      for (std::size_t i = 1; i < a.radius.size(); ++i) {
        if (a.value[i] <= level) {
          const double dv = a.value[i - 1] - a.value[i];
          if (dv <= 0.0) return a.radius[i - 1];
          const double t = (a.value[i - 1] - level) / dv;
          return a.radius[i - 1] + t * (a.radius[i] - a.radius[i - 1]);
        }
      }
      return a.radius.back();
    }
  };
  return std::visit(Visitor{level}, atom);
}

}  // namespace ltspec
