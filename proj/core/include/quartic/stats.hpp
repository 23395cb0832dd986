#pragma once

#include <cstddef>
#include <span>

namespace quartic {

/// Running moments (count, mean, central moment sums M2..M4).
struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;

  void push(double x);
  /// Combine with a summary of a disjoint sample.
  void merge(const SampleSummary& other);

  /// Unbiased variance; 0 when count < 2.
  double variance() const;
  double sd() const;
  double skewness() const;
  /// Excess kurtosis.
  double kurtosis() const;
  double mean_se() const;
  /// Standard error of the unbiased variance, from the fourth central moment.
  double variance_se() const;
};

SampleSummary summarize(std::span<const double> xs);

/// sup_x |F_a(x) - F_b(x)| of the two empirical CDFs. Throws on empty input.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// sup_x |F_a(x) - Phi((x - mean) / sd)|. Throws if sd <= 0 or a is empty.
double ks_one_sample_normal(std::span<const double> a, double mean = 0.0, double sd = 1.0);

struct Correlation {
  double r = 0.0;
  double lower = 0.0;  ///< 95% Fisher interval
  double upper = 0.0;
};

/// Pearson correlation. Throws on size mismatch or fewer than 4 points.
Correlation correlation(std::span<const double> a, std::span<const double> b);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double lower = 0.0;  ///< 95% interval for the slope
  double upper = 0.0;
};

/// Least-squares fit of log y on log x. Needs at least 3 points, all positive.
RateFit loglog_rate(std::span<const double> xs, std::span<const double> ys);

}  // namespace quartic
