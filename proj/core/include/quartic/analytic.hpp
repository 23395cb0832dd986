#pragma once

#include <cstdint>
#include <span>

namespace quartic {

/// gamma_j = 2 j^{1/2} - (j-1)^{1/2} - (j+1)^{1/2} for j >= 1.
double gamma_coef(std::int64_t j);

/// sum_{j=1}^{J} gamma_j, summed term by term.
double gamma_partial_sum(std::int64_t terms);

struct KappaEstimate {
  double value;        ///< kappa truncated after `terms` series terms
  double bound;        ///< certified |kappa - value|
  double series_tail;  ///< bound on the neglected (2/pi) sum_{j>J} gamma_j^2
  std::int64_t terms;  ///< truncation index J
};

/// kappa = (4/pi + (2/pi) sum_j (-1)^j gamma_j^2)^{1/2}, truncated at the
/// smallest J with (2 pi J^2)^{-1} <= tol, which bounds the neglected tail.
KappaEstimate kappa(double tol);

/// kappa to ~1e-14, computed once.
double kappa_value();

/// C(a, b), zero when b < 0 or b > a.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// k!! with (-1)!! = 0!! = 1.
std::int64_t double_factorial(std::int64_t k);

std::int64_t factorial(int k);

/// prod_j C(gamma_j, alpha_j) for multi-indices of equal length.
std::int64_t multi_binom(std::span<const int> gamma, std::span<const int> alpha);

}  // namespace quartic
