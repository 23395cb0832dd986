#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "quartic/polynomial.hpp"

namespace quartic {

/// Joint law of (xi, Y): xi in R^d with covariance `xi_cov`, Y scalar with
/// E[xi_j Y] = rho_j and E[Y^2] = y_var (must be 1).
struct GaussianPair {
  Eigen::MatrixXd xi_cov;
  Eigen::VectorXd rho;
  double y_var = 1.0;

  Eigen::MatrixXd joint_covariance() const;
};

struct GaussTaylorResult {
  double expansion = 0.0;  ///< sum_{|alpha|<=k} rho^alpha / alpha! E[d^alpha f(xi)] E[h_|alpha|(Y) h(Y)]
  double exact = 0.0;      ///< E[f(xi) h(Y)] from the Wick evaluator
  double remainder = 0.0;  ///< exact - expansion
  std::vector<double> order_terms;  ///< contribution of each |alpha| = 0..k
};

/// Thrown when the problem exceeds d <= 6 or degree <= 16.
class ComplexityGuard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kGaussTaylorMaxDim = 6;
inline constexpr int kGaussTaylorMaxDegree = 16;

/// Hermite-weighted Gaussian Taylor expansion of E[f(xi) h(Y)] to order k,
/// with the exact value alongside so the remainder is observable.
GaussTaylorResult gauss_taylor(const Polynomial& f, const Polynomial& h, const GaussianPair& law, int order);

/// All multi-indices in d variables with |alpha| = total, in lexicographic order.
std::vector<std::vector<int>> multi_indices(std::size_t d, int total);

}  // namespace quartic
