#pragma once

#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace quartic {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with double coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::size_t vars = 1) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, double c);
  static Polynomial variable(std::size_t vars, std::size_t index);
  static Polynomial monomial(Exponent exponent, double coeff = 1.0);
  /// sum_k coeffs[k] x^k in one variable.
  static Polynomial univariate(std::span<const double> coeffs);
  /// h_n in one variable.
  static Polynomial hermite(int n);

  std::size_t vars() const { return vars_; }
  int degree() const;
  const std::map<Exponent, double>& terms() const { return terms_; }

  void add_term(const Exponent& e, double c);

  Polynomial derivative(std::size_t var, int order = 1) const;
  /// Mixed partial d^alpha.
  Polynomial partial(std::span<const int> alpha) const;
  /// Same polynomial in `total` variables, variable i renamed to offset + i.
  Polynomial embed(std::size_t total, std::size_t offset) const;

  double operator()(std::span<const double> x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t vars_;
  std::map<Exponent, double> terms_;
};

/// Moments of a centered Gaussian vector by the Isserlis (Wick) recursion
///   E[x_a x^k] = sum_b Sigma_ab k_b E[x^{k - e_b}].
/// Memoized; not safe for concurrent use of one instance.
class GaussianMoments {
 public:
  explicit GaussianMoments(Eigen::MatrixXd covariance);

  std::size_t dim() const { return static_cast<std::size_t>(cov_.rows()); }
  double moment(std::span<const int> exponent) const;
  double expectation(const Polynomial& p) const;

 private:
  Eigen::MatrixXd cov_;
  mutable std::map<Exponent, double> memo_;
};

/// E[Z^k] for standard normal Z: (k-1)!! for even k, 0 otherwise.
double standard_normal_moment(int k);

/// E[p(Z)] for a univariate polynomial and standard normal Z.
double standard_normal_expectation(const Polynomial& p);

}  // namespace quartic
