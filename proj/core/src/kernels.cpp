#include "quartic/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace quartic {
namespace {

void check_times(double s, double t, const char* who) {
  if (s < 0.0 || t < 0.0 || std::isnan(s) || std::isnan(t))
    throw std::domain_error(std::string(who) + ": times must be nonnegative");
}

}  // namespace

double rho_heat(double s, double t) {
  check_times(s, t, "rho_heat");
  static const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return norm * (std::sqrt(t + s) - std::sqrt(std::abs(t - s)));
}

double rho_xi_lei_nualart(double s, double t) {
  check_times(s, t, "rho_xi_lei_nualart");
  return 0.5 * (std::sqrt(s) + std::sqrt(t) - std::sqrt(s + t));
}

double rho_xi_lei_nualart_integral(double s, double t, double abs_tol) {
  check_times(s, t, "rho_xi_lei_nualart_integral");
  if (s == 0.0 || t == 0.0) return 0.0;
  auto integrand = [s, t](double v) {
    if (v <= 0.0 || v >= 1.0) return 0.0;
    const double w = 1.0 - v;
    const double u = v / w;
    // -expm1 keeps 1 - e^{-x} accurate near u = 0 where the integrand ~ st u^{1/2}.
    const double a = -std::expm1(-u * s);
    const double b = -std::expm1(-u * t);
    // u^{-3/2} / w^2 rewritten as v^{-3/2} w^{-1/2}, split so neither end overflows.
    const double vp = std::pow(v, 0.75);
    return (a / vp) * (b / vp) / std::sqrt(w);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0;
  const double value = integrator.integrate(integrand, 0.0, 1.0, abs_tol, &error);
  return value / std::sqrt(16.0 * std::numbers::pi);
}

double rho_fbm_quarter(double s, double t) {
  check_times(s, t, "rho_fbm_quarter");
  return 0.5 * (std::sqrt(s) + std::sqrt(t) - std::sqrt(std::abs(t - s)));
}

double rho_brownian(double s, double t) {
  check_times(s, t, "rho_brownian");
  return std::min(s, t);
}

double fbm_decomposition_scale() { return std::pow(std::numbers::pi / 2.0, 0.25); }

Drift Drift::polynomial(std::vector<double> coeffs) {
  std::ostringstream os;
  os.precision(17);
  os << "poly(";
  for (std::size_t k = 0; k < coeffs.size(); ++k) os << (k ? "," : "") << coeffs[k];
  os << ")";
  return Drift{os.str(), std::move(coeffs)};
}

bool Drift::is_zero() const {
  for (double a : coeffs)
    if (a != 0.0) return false;
  return true;
}

double Drift::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Heat: return "Heat";
    case KernelKind::FbmQuarter: return "FbmQuarter";
    case KernelKind::LeiNualartXi: return "LeiNualartXi";
    case KernelKind::Composite: return "Composite";
    case KernelKind::BrownianMotion: return "BrownianMotion";
  }
  return "?";
}

KernelKind kernel_kind_from_string(const std::string& name) {
  for (auto k : {KernelKind::Heat, KernelKind::FbmQuarter, KernelKind::LeiNualartXi,
                 KernelKind::Composite, KernelKind::BrownianMotion})
    if (name == to_string(k)) return k;
  throw std::invalid_argument("unknown kernel kind '" + name +
                              "' (expected Heat, FbmQuarter, LeiNualartXi, Composite, BrownianMotion)");
}

CovKernel CovKernel::heat() { return CovKernel(KernelKind::Heat); }
CovKernel CovKernel::fbm_quarter() { return CovKernel(KernelKind::FbmQuarter); }
CovKernel CovKernel::lei_nualart_xi() { return CovKernel(KernelKind::LeiNualartXi); }
CovKernel CovKernel::brownian_motion() { return CovKernel(KernelKind::BrownianMotion); }

CovKernel CovKernel::composite(double c, CovKernel scaled) {
  if (!std::isfinite(c)) throw std::invalid_argument("composite kernel: scale must be finite");
  CovKernel k(KernelKind::Composite);
  k.c_ = c;
  k.parts_.push_back(std::move(scaled));
  return k;
}

CovKernel CovKernel::composite(double c, CovKernel scaled, CovKernel added) {
  CovKernel k = composite(c, std::move(scaled));
  k.parts_.push_back(std::move(added));
  return k;
}

CovKernel CovKernel::with_drift(Drift drift) const {
  CovKernel k = *this;
  k.drift_ = std::move(drift);
  return k;
}

double CovKernel::covariance(double s, double t) const {
  switch (kind_) {
    case KernelKind::Heat: return rho_heat(s, t);
    case KernelKind::FbmQuarter: return rho_fbm_quarter(s, t);
    case KernelKind::LeiNualartXi: return rho_xi_lei_nualart(s, t);
    case KernelKind::BrownianMotion: return rho_brownian(s, t);
    case KernelKind::Composite: {
      double r = c_ * c_ * parts_[0].covariance(s, t);
      if (parts_.size() > 1) r += parts_[1].covariance(s, t);
      return r;
    }
  }
  throw std::logic_error("covariance: unhandled kernel kind");
}

double CovKernel::mean(double t) const {
  double m = drift_(t);
  if (kind_ == KernelKind::Composite) {
    m += c_ * parts_[0].mean(t);
    if (parts_.size() > 1) m += parts_[1].mean(t);
  }
  return m;
}

bool CovKernel::centered() const {
  if (!drift_.is_zero()) return false;
  for (const auto& p : parts_)
    if (!p.centered()) return false;
  return true;
}

std::string CovKernel::id() const {
  std::string base;
  switch (kind_) {
    case KernelKind::Heat: base = "heat"; break;
    case KernelKind::FbmQuarter: base = "fbm"; break;
    case KernelKind::LeiNualartXi: base = "xi"; break;
    case KernelKind::BrownianMotion: base = "bm"; break;
    case KernelKind::Composite: {
      std::ostringstream os;
      os.precision(17);
      os << "composite(c=" << c_;
      for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : ";") << parts_[i].id();
      os << ")";
      base = os.str();
      break;
    }
  }
  if (!drift_.is_zero()) base += "+" + drift_.id;
  return base;
}

Eigen::MatrixXd build_cov_matrix(const CovKernel& kernel, const Grid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.steps());
  Eigen::MatrixXd r(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double tj = grid.time(static_cast<std::size_t>(j + 1));
    for (Eigen::Index i = j; i < n; ++i) {
      const double v = kernel.covariance(grid.time(static_cast<std::size_t>(i + 1)), tj);
      r(i, j) = v;
      r(j, i) = v;
    }
  }
  return r;
}

}  // namespace quartic
