#include "ltspec/potential1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ltspec {

namespace {
constexpr double kSupportDrop = 1e-14;
}

Potential1D Potential1D::square_well(double half_width) {
  if (!(half_width > 0.0))
    throw std::invalid_argument("Potential1D: half width must be > 0");
  Potential1D p{Kind{SquareWell{half_width}}};
  p.moment0_ = 2.0 * half_width;
  p.moment1_abs_ = half_width * half_width;
  p.support_radius_ = half_width;
  p.max_value_ = 1.0;
  return p;
}

Potential1D Potential1D::gaussian(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("Potential1D: sigma must be > 0");
  Potential1D p{Kind{Gaussian{sigma}}};
  p.moment0_ = sigma * std::sqrt(2.0 * M_PI);
  p.moment1_abs_ = 2.0 * sigma * sigma;
  p.support_radius_ = sigma * std::sqrt(-2.0 * std::log(kSupportDrop));
  p.max_value_ = 1.0;
  return p;
}

Potential1D Potential1D::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("Potential1D: rate must be > 0");
  Potential1D p{Kind{Exponential{rate}}};
  p.moment0_ = 2.0 / rate;
  p.moment1_abs_ = 2.0 / (rate * rate);
  p.support_radius_ = -std::log(kSupportDrop) / rate;
  p.max_value_ = 1.0;
  return p;
}

Potential1D Potential1D::tabulated(std::vector<double> z, std::vector<double> v) {
  if (z.size() != v.size() || z.size() < 2)
    throw std::invalid_argument("Potential1D: tabulated needs >= 2 matched samples");
  double vmax = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i > 0 && !(z[i] > z[i - 1]))
      throw std::invalid_argument("Potential1D: tabulated grid must increase");
    if (!(v[i] >= 0.0))
      throw std::invalid_argument("Potential1D: tabulated values must be >= 0");
    vmax = std::max(vmax, v[i]);
  }
  if (vmax == 0.0)
    throw std::invalid_argument("Potential1D: v must not vanish identically");
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) {
    const double h = z[i] - z[i - 1];
    m0 += 0.5 * h * (v[i] + v[i - 1]);
    m1 += 0.5 * h * (std::abs(z[i]) * v[i] + std::abs(z[i - 1]) * v[i - 1]);
  }
  double radius = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (v[i] > kSupportDrop * vmax) radius = std::max(radius, std::abs(z[i]));
  Potential1D p{Kind{Tabulated{std::move(z), std::move(v)}}};
  p.moment0_ = m0;
  p.moment1_abs_ = m1;
  p.support_radius_ = radius;
  p.max_value_ = vmax;
  return p;
}

Potential1D::Potential1D(Kind kind) : kind_(std::move(kind)) {}

double Potential1D::value(double z) const {
  struct Visitor {
    double z;
    double operator()(const SquareWell& w) const {
      return std::abs(z) <= w.half_width ? 1.0 : 0.0;
    }
    double operator()(const Gaussian& g) const {
      return std::exp(-z * z / (2.0 * g.sigma * g.sigma));
    }
    double operator()(const Exponential& e) const {
      return std::exp(-e.rate * std::abs(z));
    }
    double operator()(const Tabulated& t) const {
      if (z <= t.z.front() || z >= t.z.back()) {
        if (z == t.z.front()) return t.v.front();
        if (z == t.z.back()) return t.v.back();
        return 0.0;
      }
      const auto it = std::upper_bound(t.z.begin(), t.z.end(), z);
      const std::size_t i = std::size_t(it - t.z.begin());
      const double s = (z - t.z[i - 1]) / (t.z[i] - t.z[i - 1]);
      return t.v[i - 1] + s * (t.v[i] - t.v[i - 1]);
    }
  };
  return std::visit(Visitor{z}, kind_);
}

double Potential1D::max_value() const { return max_value_; }

double Potential1D::tail_mass(double L) const {
  struct Visitor {
    double L;
    const Potential1D* self;
    double operator()(const SquareWell& w) const {
      return L >= w.half_width ? 0.0 : 2.0 * (w.half_width - L);
    }
    double operator()(const Gaussian& g) const {
      return g.sigma * std::sqrt(2.0 * M_PI) * std::erfc(L / (g.sigma * std::sqrt(2.0)));
    }
    double operator()(const Exponential& e) const {
      return 2.0 * std::exp(-e.rate * L) / e.rate;
    }
    double operator()(const Tabulated& t) const {
      double m = 0.0;
      for (std::size_t i = 1; i < t.z.size(); ++i) {
        if (std::abs(t.z[i]) <= L && std::abs(t.z[i - 1]) <= L) continue;
        const double h = t.z[i] - t.z[i - 1];
        m += 0.5 * h * (t.v[i] + t.v[i - 1]);
      }
      return m;
    }
  };
  return std::visit(Visitor{L, this}, kind_);
}

}  // namespace ltspec
