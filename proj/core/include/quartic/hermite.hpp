#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace quartic {

/// Probabilists' Hermite polynomial h_n(x) via h_{n+1} = x h_n - n h_{n-1},
/// with h_{-1} = 0 and h_0 = 1.
double hermite_eval(int n, double x);

/// Integer monomial coefficients of h_0..h_max.
class HermiteBasis {
 public:
  static constexpr int kMaxDegree = 30;  // coefficients stay within int64

  explicit HermiteBasis(int max_degree);

  int max_degree() const { return static_cast<int>(table_.size()) - 1; }

  /// Coefficients c_0..c_n with h_n(x) = sum_k c_k x^k.
  std::span<const std::int64_t> coefficients(int n) const { return table_.at(static_cast<std::size_t>(n)); }

  double eval(int n, double x) const;

 private:
  std::vector<std::vector<std::int64_t>> table_;
};

/// x^n = sum_{j=0}^{n/2} C(n, 2j) (2j-1)!! h_{n-2j}(x); entry j is the
/// coefficient of h_{n-2j}.
std::vector<std::int64_t> monomial_in_hermite(int n);

}  // namespace quartic
