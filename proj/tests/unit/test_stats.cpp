#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "quartic/stats.hpp"

using namespace quartic;

namespace {

std::vector<double> normals(std::size_t n, unsigned seed, double mean = 0.0, double sd = 1.0) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z(mean, sd);
  std::vector<double> out(n);
  for (auto& x : out) x = z(gen);
  return out;
}

using V = std::vector<double>;

}  // namespace

TEST(summary, moments_of_small_sample) {
  const V xs{1.0, 2.0, 3.0, 4.0, 10.0};
  const auto s = summarize(xs);
  EXPECT_EQ(s.count, 5u);
  EXPECT_DOUBLE_EQ(s.mean, 4.0);
  EXPECT_DOUBLE_EQ(s.variance(), 12.5);
  EXPECT_DOUBLE_EQ(s.sd(), std::sqrt(12.5));
  EXPECT_DOUBLE_EQ(s.mean_se(), std::sqrt(12.5 / 5.0));
  // population central moments: m2 = 10, m3 = 36, m4 = 278.8 (per observation)
  EXPECT_NEAR(s.skewness(), 36.0 / std::pow(10.0, 1.5), 1e-12);
  EXPECT_NEAR(s.kurtosis(), 278.8 / 100.0 - 3.0, 1e-12);
  EXPECT_EQ(summarize(V{3.0}).variance(), 0.0);
}

TEST(summary, merge_equals_concatenation) {
  const auto a = normals(1000, 1, 2.0, 3.0);
  const auto b = normals(377, 2, -1.0, 0.5);
  V all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto sa = summarize(a);
  sa.merge(summarize(b));
  const auto sall = summarize(all);
  EXPECT_EQ(sa.count, sall.count);
  EXPECT_NEAR(sa.mean, sall.mean, 1e-12 * std::abs(sall.mean));
  EXPECT_NEAR(sa.variance(), sall.variance(), 1e-12 * sall.variance());
  EXPECT_NEAR(sa.skewness(), sall.skewness(), 1e-9);
  EXPECT_NEAR(sa.kurtosis(), sall.kurtosis(), 1e-9);

  SampleSummary empty;
  empty.merge(sall);
  EXPECT_EQ(empty.count, sall.count);
  EXPECT_EQ(empty.mean, sall.mean);
}

TEST(summary, merge_is_associative) {
  const auto a = normals(100, 3), b = normals(200, 4), c = normals(50, 5);
  auto left = summarize(a);
  left.merge(summarize(b));
  left.merge(summarize(c));
  auto bc = summarize(b);
  bc.merge(summarize(c));
  auto right = summarize(a);
  right.merge(bc);
  EXPECT_NEAR(left.mean, right.mean, 1e-14);
  EXPECT_NEAR(left.variance(), right.variance(), 1e-13);
}

TEST(summary, variance_se_for_normal_data) {
  const auto xs = normals(20000, 6);
  const auto s = summarize(xs);
  EXPECT_NEAR(s.variance_se(), std::sqrt(2.0 / 19999.0), 0.1 * std::sqrt(2.0 / 19999.0));
  EXPECT_GE(s.variance(), 0.0);
}

TEST(ks_two_sample, examples) {
  const V a{1.0, 2.0, 3.0};
  EXPECT_EQ(ks_two_sample(a, a), 0.0);
  EXPECT_EQ(ks_two_sample(V{0.0}, V{1.0}), 1.0);
  EXPECT_NEAR(ks_two_sample(a, V{1.5, 2.5}), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(ks_two_sample(V{1.0, 1.0, 2.0, 2.0}, V{1.0, 2.0}), 0.0, 1e-15);
  EXPECT_NEAR(ks_two_sample(V{1.0, 2.0}, V{2.0, 3.0}), 0.5, 1e-15);
  EXPECT_THROW(ks_two_sample(V{}, a), std::invalid_argument);
  EXPECT_THROW(ks_two_sample(a, V{}), std::invalid_argument);
}

TEST(ks_two_sample, symmetric_and_transform_invariant) {
  const auto a = normals(300, 7);
  const auto b = normals(451, 8, 0.2, 1.3);
  const double d = ks_two_sample(a, b);
  EXPECT_EQ(d, ks_two_sample(b, a));
  V ea(a.size()), eb(b.size());
  std::transform(a.begin(), a.end(), ea.begin(), [](double x) { return std::exp(x); });
  std::transform(b.begin(), b.end(), eb.begin(), [](double x) { return std::exp(x); });
  EXPECT_EQ(d, ks_two_sample(ea, eb));
}

TEST(ks_two_sample, brute_force_oracle) {
  const auto a = normals(57, 9);
  const auto b = normals(83, 10, 0.3);
  V points = a;
  points.insert(points.end(), b.begin(), b.end());
  double best = 0.0;
  for (double x : points) {
    const double fa = static_cast<double>(std::count_if(a.begin(), a.end(), [x](double v) { return v <= x; })) / a.size();
    const double fb = static_cast<double>(std::count_if(b.begin(), b.end(), [x](double v) { return v <= x; })) / b.size();
    best = std::max(best, std::abs(fa - fb));
  }
  EXPECT_NEAR(ks_two_sample(a, b), best, 1e-15);
}

TEST(ks_one_sample, examples) {
  EXPECT_DOUBLE_EQ(ks_one_sample_normal(V{0.0}), 0.5);
  EXPECT_DOUBLE_EQ(ks_one_sample_normal(V{2.0, 2.0, 2.0}, 2.0, 0.5), 0.5);
  EXPECT_LE(ks_one_sample_normal(normals(10000, 11)), 0.02);
  EXPECT_LE(ks_one_sample_normal(normals(10000, 12, 3.0, 2.0), 3.0, 2.0), 0.02);
  EXPECT_GT(ks_one_sample_normal(normals(10000, 13, 0.5)), 0.1);
  EXPECT_THROW(ks_one_sample_normal(V{1.0}, 0.0, 0.0), std::domain_error);
  EXPECT_THROW(ks_one_sample_normal(V{}), std::invalid_argument);
}

TEST(correlation, perfect_and_independent) {
  const V x{1.0, 2.0, 3.0, 4.0, 5.0};
  const V y{2.0, 4.0, 6.0, 8.0, 10.0};
  EXPECT_NEAR(correlation(x, y).r, 1.0, 1e-15);
  const V z{5.0, 4.0, 3.0, 2.0, 1.0};
  EXPECT_NEAR(correlation(x, z).r, -1.0, 1e-15);
  const auto a = normals(5000, 14), b = normals(5000, 15);
  const auto c = correlation(a, b);
  EXPECT_LT(std::abs(c.r), 0.05);
  EXPECT_LT(c.lower, c.r);
  EXPECT_GT(c.upper, c.r);
  EXPECT_NEAR(c.upper - c.lower, 2.0 * 1.96 / std::sqrt(4997.0), 0.01);
  EXPECT_THROW(correlation(V{1, 2, 3}, V{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(correlation(x, V{1, 2, 3, 4}), std::invalid_argument);
}

TEST(loglog_rate, exact_power_laws) {
  const V xs{256, 1024, 4096, 16384};
  V ys(xs.size()), zs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = std::pow(xs[i], -2.0);
    zs[i] = 3.0 * std::pow(xs[i], -0.5);
  }
  const auto f = loglog_rate(xs, ys);
  EXPECT_NEAR(f.slope, -2.0, 1e-12);
  EXPECT_NEAR(f.slope_se, 0.0, 1e-10);
  EXPECT_NEAR(loglog_rate(xs, zs).slope, -0.5, 1e-12);
  EXPECT_NEAR(loglog_rate(xs, zs).intercept, std::log(3.0), 1e-10);
}

TEST(loglog_rate, noisy_fixture_covers_truth) {
  std::mt19937_64 gen(16);
  std::uniform_real_distribution<double> noise(-0.1, 0.1);
  V xs, ys;
  for (double x = 10.0; x <= 1e5; x *= 3.0) {
    xs.push_back(x);
    ys.push_back(2.0 / x * (1.0 + noise(gen)));
  }
  const auto f = loglog_rate(xs, ys);
  EXPECT_LE(f.lower, -1.0);
  EXPECT_GE(f.upper, -1.0);
  EXPECT_NEAR(f.slope, -1.0, 0.05);
}

TEST(loglog_rate, rejects_bad_input) {
  EXPECT_THROW(loglog_rate(V{1, 2}, V{1, 2}), std::invalid_argument);
  EXPECT_THROW(loglog_rate(V{1, 2, 3}, V{1, 0, 3}), std::domain_error);
  EXPECT_THROW(loglog_rate(V{1, -2, 3}, V{1, 2, 3}), std::domain_error);
  EXPECT_THROW(loglog_rate(V{1, 2, 3}, V{1, 2}), std::invalid_argument);
}
