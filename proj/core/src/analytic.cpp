#include "quartic/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quartic {

double gamma_coef(std::int64_t j) {
  if (j <= 0) throw std::domain_error("gamma_coef: j must be a positive integer");
  // 2 sqrt(j) - sqrt(j-1) - sqrt(j+1) rewritten without cancellation.
  const double a = std::sqrt(static_cast<double>(j - 1));
  const double b = std::sqrt(static_cast<double>(j));
  const double c = std::sqrt(static_cast<double>(j + 1));
  return 2.0 / ((c + a) * (b + a) * (c + b));
}

double gamma_partial_sum(std::int64_t terms) {
  double s = 0.0;
  for (std::int64_t j = terms; j >= 1; --j) s += gamma_coef(j);
  return s;
}

KappaEstimate kappa(double tol) {
  if (!(tol > 0.0)) throw std::domain_error("kappa: tolerance must be positive");
  const double pi = std::numbers::pi;
  auto terms = static_cast<std::int64_t>(std::ceil(std::sqrt(1.0 / (2.0 * pi * tol))));
  if (terms < 1) terms = 1;
  // Smallest terms first.
  double series = 0.0;
  for (std::int64_t j = terms; j >= 1; --j) {
    const double g = gamma_coef(j);
    series += (j % 2 == 0 ? g * g : -g * g);
  }
  const double squared = 4.0 / pi + 2.0 / pi * series;
  const double tail = 1.0 / (2.0 * pi * static_cast<double>(terms) * static_cast<double>(terms));
  const double value = std::sqrt(squared);
  // |k - k_J| = |k^2 - k_J^2| / (k + k_J) with k^2 within `tail` of k_J^2.
  const double lower = std::sqrt(std::max(squared - tail, 0.0));
  const double rounding = 1e-16 * static_cast<double>(terms) + 4e-16;
  return {value, tail / (value + lower) + rounding, tail, terms};
}

double kappa_value() {
  static const double k = kappa(1e-14).value;
  return k;
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::domain_error("binomial: top index must be nonnegative");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::int64_t double_factorial(std::int64_t k) {
  if (k < -1) throw std::domain_error("double_factorial: argument below -1");
  std::int64_t r = 1;
  for (std::int64_t i = k; i > 1; i -= 2) r *= i;
  return r;
}

std::int64_t factorial(int k) {
  if (k < 0 || k > 20) throw std::domain_error("factorial: argument outside [0, 20]");
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::int64_t multi_binom(std::span<const int> gamma, std::span<const int> alpha) {
  if (gamma.size() != alpha.size()) throw std::invalid_argument("multi_binom: length mismatch");
  std::int64_t r = 1;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (gamma[j] < 0) return 0;
    r *= binomial(gamma[j], alpha[j]);
    if (r == 0) return 0;
  }
  return r;
}

}  // namespace quartic
