#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quartic {

/// E[dF_i dF_j] for the heat kernel at resolution n, by bilinearity of rho_heat.
double heat_increment_cov(std::int64_t n, std::int64_t i, std::int64_t j);

/// Exact second moments of heat-kernel increments on the grid j/n.
struct DiscreteCovTable {
  std::int64_t n = 0;
  std::size_t maxj = 0;
  std::size_t lag = 0;
  std::vector<double> sigma_sq;   ///< sigma_sq[j-1] = E dF_j^2
  std::vector<double> sigma_hat;  ///< sigma_hat[j-1] = E[F(t_{j-1}) dF_j]
  std::vector<double> cross;      ///< cross[(j-1)*lag + (l-1)] = E[dF_{j-l} dF_j]; NaN if j <= l

  double sigma_sq_at(std::size_t j) const { return sigma_sq.at(j - 1); }
  double sigma_hat_at(std::size_t j) const { return sigma_hat.at(j - 1); }
  /// E[dF_i dF_j] for i < j with j - i <= lag.
  double cross_at(std::size_t i, std::size_t j) const;
};

DiscreteCovTable discrete_cov_table(std::int64_t n, std::size_t maxj, std::size_t lag);

struct InequalityViolation {
  std::string inequality;  ///< "sig2", "sig3" or "cross"
  std::size_t i = 0;       ///< 0 for the single-index inequalities
  std::size_t j = 0;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Exhaustive check of the increment-variance and cross-covariance bounds:
///   sig2:  |sigma_j^2 - (2/pi)^{1/2} dt^{1/2}| <= j^{-3/2} dt^{1/2}
///   sig3:  pi^{-1/2} dt^{1/2} <= sigma_j^2 <= 2 dt^{1/2}
///   cross: -2 (j-i)^{-3/2} dt^{1/2} <= E[dF_i dF_j] < 0 for all i < j
/// plus sup-ratios for the bounds whose constant is unspecified.
struct CovAudit {
  std::int64_t n = 0;
  std::size_t maxj = 0;
  std::size_t sig2_checked = 0;
  std::size_t sig3_checked = 0;
  std::size_t cross_checked = 0;
  std::size_t sig2_violations = 0;
  std::size_t sig3_violations = 0;
  std::size_t cross_violations = 0;
  std::vector<InequalityViolation> examples;  ///< first violations, capped

  /// sup_j |sigma_hat_j + (2 pi)^{-1/2} dt^{1/2}| / (j^{-1/2} dt^{1/2})
  double sighat_ratio = 0.0;
  /// sup_{i<=j} |E[F(t_{i-1}) dF_j]| / (dt^{1/2} ((j-i) v 1)^{-1/2})
  double sigdel_first_ratio = 0.0;
  /// sup_{i<=j} |E[F(t_{j-1}) dF_i]| / (dt^{1/2} ((j-i) v 1)^{-1/2})
  double sigdel_third_ratio = 0.0;

  bool passed() const { return sig2_violations + sig3_violations + cross_violations == 0; }
};

/// Relative slack on the sig3 band; sigma_1^2 sits exactly on its lower edge.
inline constexpr double kBandSlack = 1e-12;

CovAudit audit_cov_table(std::int64_t n, std::size_t maxj);

}  // namespace quartic
