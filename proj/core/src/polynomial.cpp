#include "quartic/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "quartic/analytic.hpp"
#include "quartic/hermite.hpp"

namespace quartic {

Polynomial Polynomial::constant(std::size_t vars, double c) {
  Polynomial p(vars);
  p.add_term(Exponent(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t index) {
  if (index >= vars) throw std::out_of_range("Polynomial::variable: index out of range");
  Exponent e(vars, 0);
  e[index] = 1;
  Polynomial p(vars);
  p.add_term(e, 1.0);
  return p;
}

Polynomial Polynomial::monomial(Exponent exponent, double coeff) {
  Polynomial p(exponent.size());
  p.add_term(exponent, coeff);
  return p;
}

Polynomial Polynomial::univariate(std::span<const double> coeffs) {
  Polynomial p(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term({static_cast<int>(k)}, coeffs[k]);
  return p;
}

Polynomial Polynomial::hermite(int n) {
  if (n < 0) return Polynomial(1);
  const HermiteBasis basis(n);
  Polynomial p(1);
  const auto c = basis.coefficients(n);
  for (std::size_t k = 0; k < c.size(); ++k) p.add_term({static_cast<int>(k)}, static_cast<double>(c[k]));
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const Exponent& e, double c) {
  if (e.size() != vars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var, int order) const {
  if (var >= vars_) throw std::out_of_range("Polynomial::derivative: variable out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < order) continue;
    double factor = c;
    for (int k = 0; k < order; ++k) factor *= e[var] - k;
    Exponent f = e;
    f[var] -= order;
    out.add_term(f, factor);
  }
  return out;
}

Polynomial Polynomial::partial(std::span<const int> alpha) const {
  if (alpha.size() != vars_) throw std::invalid_argument("Polynomial::partial: multi-index length mismatch");
  Polynomial out = *this;
  for (std::size_t v = 0; v < vars_; ++v)
    if (alpha[v] > 0) out = out.derivative(v, alpha[v]);
  return out;
}

Polynomial Polynomial::embed(std::size_t total, std::size_t offset) const {
  if (offset + vars_ > total) throw std::out_of_range("Polynomial::embed: target too small");
  Polynomial out(total);
  for (const auto& [e, c] : terms_) {
    Exponent f(total, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(f, c);
  }
  return out;
}

double Polynomial::operator()(std::span<const double> x) const {
  if (x.size() != vars_) throw std::invalid_argument("Polynomial: point dimension mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (std::size_t v = 0; v < vars_; ++v) term *= std::pow(x[v], e[v]);
    acc += term;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.vars_);
      for (std::size_t v = 0; v < a.vars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

GaussianMoments::GaussianMoments(Eigen::MatrixXd covariance) : cov_(std::move(covariance)) {
  if (cov_.rows() != cov_.cols()) throw std::invalid_argument("GaussianMoments: covariance must be square");
  if (cov_.size() > 0 &&
      (cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-14 * cov_.cwiseAbs().maxCoeff())
    throw std::invalid_argument("GaussianMoments: covariance must be symmetric");
}

double GaussianMoments::moment(std::span<const int> exponent) const {
  if (exponent.size() != dim()) throw std::invalid_argument("GaussianMoments: exponent length mismatch");
  int total = 0;
  std::size_t first = dim();
  for (std::size_t v = 0; v < exponent.size(); ++v) {
    if (exponent[v] < 0) throw std::invalid_argument("GaussianMoments: negative exponent");
    total += exponent[v];
    if (exponent[v] > 0 && first == dim()) first = v;
  }
  if (total == 0) return 1.0;
  if (total % 2 == 1) return 0.0;

  Exponent key(exponent.begin(), exponent.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Pull one factor x_first and pair it with every remaining factor.
  Exponent rest = key;
  --rest[first];
  double acc = 0.0;
  for (std::size_t b = 0; b < dim(); ++b) {
    if (rest[b] == 0) continue;
    const double s = cov_(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(b));
    if (s == 0.0) continue;
    Exponent reduced = rest;
    --reduced[b];
    acc += s * rest[b] * moment(reduced);
  }
  memo_.emplace(std::move(key), acc);
  return acc;
}

double GaussianMoments::expectation(const Polynomial& p) const {
  if (p.vars() != dim()) throw std::invalid_argument("GaussianMoments: polynomial dimension mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : p.terms()) acc += c * moment(e);
  return acc;
}

double standard_normal_moment(int k) {
  if (k < 0) throw std::domain_error("standard_normal_moment: negative order");
  if (k % 2 == 1) return 0.0;
  return static_cast<double>(double_factorial(k - 1));
}

double standard_normal_expectation(const Polynomial& p) {
  if (p.vars() != 1) throw std::invalid_argument("standard_normal_expectation: polynomial must be univariate");
  double acc = 0.0;
  for (const auto& [e, c] : p.terms()) acc += c * standard_normal_moment(e[0]);
  return acc;
}

}  // namespace quartic
