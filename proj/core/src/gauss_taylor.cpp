#include "quartic/gauss_taylor.hpp"

#include <cmath>

#include "quartic/analytic.hpp"

namespace quartic {
namespace {

void enumerate(std::size_t d, int remaining, std::vector<int>& cur, std::size_t pos,
               std::vector<std::vector<int>>& out) {
  if (pos + 1 == d) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[pos] = a;
    enumerate(d, remaining - a, cur, pos + 1, out);
  }
}

}  // namespace

Eigen::MatrixXd GaussianPair::joint_covariance() const {
  const Eigen::Index d = xi_cov.rows();
  Eigen::MatrixXd c(d + 1, d + 1);
  c.topLeftCorner(d, d) = xi_cov;
  c.topRightCorner(d, 1) = rho;
  c.bottomLeftCorner(1, d) = rho.transpose();
  c(d, d) = y_var;
  return c;
}

std::vector<std::vector<int>> multi_indices(std::size_t d, int total) {
  std::vector<std::vector<int>> out;
  if (d == 0 || total < 0) return out;
  std::vector<int> cur(d, 0);
  enumerate(d, total, cur, 0, out);
  return out;
}

GaussTaylorResult gauss_taylor(const Polynomial& f, const Polynomial& h, const GaussianPair& law, int order) {
  const std::size_t d = f.vars();
  if (std::abs(law.y_var - 1.0) > 1e-12) throw std::domain_error("gauss_taylor: E[Y^2] must equal 1");
  if (law.xi_cov.rows() != static_cast<Eigen::Index>(d) || law.xi_cov.cols() != static_cast<Eigen::Index>(d) ||
      law.rho.size() != static_cast<Eigen::Index>(d))
    throw std::invalid_argument("gauss_taylor: covariance dimensions do not match f");
  if (h.vars() != 1) throw std::invalid_argument("gauss_taylor: h must be univariate");
  if (order < 0) throw std::domain_error("gauss_taylor: order must be nonnegative");
  if (d > kGaussTaylorMaxDim) throw ComplexityGuard("gauss_taylor: more than 6 variables");
  if (f.degree() > kGaussTaylorMaxDegree || h.degree() > kGaussTaylorMaxDegree)
    throw ComplexityGuard("gauss_taylor: total degree above 16");

  const GaussianMoments xi_moments(law.xi_cov);
  GaussTaylorResult out;
  out.order_terms.assign(static_cast<std::size_t>(order) + 1, 0.0);
  for (int m = 0; m <= order; ++m) {
    const double hermite_weight = standard_normal_expectation(Polynomial::hermite(m) * h);
    if (hermite_weight == 0.0) continue;
    double acc = 0.0;
    for (const auto& alpha : multi_indices(d, m)) {
      double rho_pow = 1.0;
      double alpha_fact = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        rho_pow *= std::pow(law.rho(static_cast<Eigen::Index>(j)), alpha[j]);
        alpha_fact *= static_cast<double>(factorial(alpha[j]));
      }
      if (rho_pow == 0.0) continue;
      acc += rho_pow / alpha_fact * xi_moments.expectation(f.partial(alpha));
    }
    out.order_terms[static_cast<std::size_t>(m)] = acc * hermite_weight;
    out.expansion += out.order_terms[static_cast<std::size_t>(m)];
  }

  const GaussianMoments joint(law.joint_covariance());
  out.exact = joint.expectation(f.embed(d + 1, 0) * h.embed(d + 1, d));
  out.remainder = out.exact - out.expansion;
  return out;
}

}  // namespace quartic
