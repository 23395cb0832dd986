#include "quartic/hermite.hpp"

#include <stdexcept>

#include "quartic/analytic.hpp"

namespace quartic {

double hermite_eval(int n, double x) {
  if (n < -1) throw std::domain_error("hermite_eval: degree below -1");
  if (n == -1) return 0.0;
  double prev = 0.0;  // h_{-1}
  double cur = 1.0;   // h_0
  for (int k = 0; k < n; ++k) {
    const double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

HermiteBasis::HermiteBasis(int max_degree) {
  if (max_degree < 0 || max_degree > kMaxDegree)
    throw std::domain_error("HermiteBasis: degree must lie in [0, 30]");
  table_.resize(static_cast<std::size_t>(max_degree) + 1);
  table_[0] = {1};
  if (max_degree >= 1) table_[1] = {0, 1};
  for (int k = 1; k < max_degree; ++k) {
    const auto& hk = table_[static_cast<std::size_t>(k)];
    const auto& hkm1 = table_[static_cast<std::size_t>(k - 1)];
    std::vector<std::int64_t> next(static_cast<std::size_t>(k) + 2, 0);
    for (std::size_t i = 0; i < hk.size(); ++i) next[i + 1] += hk[i];
    for (std::size_t i = 0; i < hkm1.size(); ++i) next[i] -= k * hkm1[i];
    table_[static_cast<std::size_t>(k) + 1] = std::move(next);
  }
}

double HermiteBasis::eval(int n, double x) const {
  const auto c = coefficients(n);
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

std::vector<std::int64_t> monomial_in_hermite(int n) {
  if (n < 0) throw std::domain_error("monomial_in_hermite: degree must be nonnegative");
  std::vector<std::int64_t> out;
  for (int j = 0; 2 * j <= n; ++j) out.push_back(binomial(n, 2 * j) * double_factorial(2 * j - 1));
  return out;
}

}  // namespace quartic
