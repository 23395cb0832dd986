#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quartic/grid.hpp"

namespace quartic {

// Pointwise covariances. All throw std::domain_error for negative times.

/// Covariance of the heat-equation slice F(t) = u(x, t):
/// (2 pi)^{-1/2} (|t + s|^{1/2} - |t - s|^{1/2}).
double rho_heat(double s, double t);

/// Covariance of the smooth Lei-Nualart component xi: (sqrt(s) + sqrt(t) - sqrt(s + t)) / 2.
double rho_xi_lei_nualart(double s, double t);

/// The same covariance evaluated from its integral representation
/// (16 pi)^{-1/2} int_0^inf (1 - e^{-us})(1 - e^{-ut}) u^{-3/2} du by adaptive
/// quadrature after the substitution u = v / (1 - v). Validation route only.
double rho_xi_lei_nualart_integral(double s, double t, double abs_tol = 1e-10);

/// Fractional Brownian motion with H = 1/4: (|s|^{1/2} + |t|^{1/2} - |t - s|^{1/2}) / 2.
double rho_fbm_quarter(double s, double t);

/// Standard Brownian motion: min(s, t).
double rho_brownian(double s, double t);

/// c = (pi/2)^{1/4}, the scale for which c F + xi has the law of fBm with H = 1/4.
double fbm_decomposition_scale();

/// Deterministic mean path added after sampling. Only polynomial drifts
/// v(t) = sum_k coeffs[k] t^k are built in.
struct Drift {
  std::string id = "zero";
  std::vector<double> coeffs;

  static Drift zero() { return {}; }
  static Drift polynomial(std::vector<double> coeffs);

  bool is_zero() const;
  double operator()(double t) const;
};

enum class KernelKind { Heat, FbmQuarter, LeiNualartXi, Composite, BrownianMotion };

const char* to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& name);

/// Mean and covariance of a Gaussian process on [0, T].
///
/// A composite kernel models X = c A + B for independent components A and B
/// (B optional), so rho_X = c^2 rho_A + rho_B.
class CovKernel {
 public:
  static CovKernel heat();
  static CovKernel fbm_quarter();
  static CovKernel lei_nualart_xi();
  static CovKernel brownian_motion();
  static CovKernel composite(double c, CovKernel scaled);
  static CovKernel composite(double c, CovKernel scaled, CovKernel added);

  /// Copy with the given deterministic mean attached.
  CovKernel with_drift(Drift drift) const;

  double covariance(double s, double t) const;
  double operator()(double s, double t) const { return covariance(s, t); }
  double mean(double t) const;

  KernelKind kind() const { return kind_; }
  double scale() const { return c_; }
  std::span<const CovKernel> components() const { return parts_; }
  const Drift& drift() const { return drift_; }
  bool centered() const;

  /// Short provenance tag, e.g. "heat" or "composite(c=1.2533141373155001;heat,xi)".
  std::string id() const;

 private:
  explicit CovKernel(KernelKind kind) : kind_(kind) {}

  KernelKind kind_;
  double c_ = 1.0;
  std::vector<CovKernel> parts_;
  Drift drift_;
};

/// Gram matrix R(i-1, j-1) = rho(t_i, t_j) for 1 <= i, j <= floor(nT).
/// t_0 = 0 is left out since every built-in kernel vanishes there.
Eigen::MatrixXd build_cov_matrix(const CovKernel& kernel, const Grid& grid);

}  // namespace quartic
