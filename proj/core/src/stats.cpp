#include "quartic/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace quartic {

void SampleSummary::push(double x) {
  SampleSummary one;
  one.count = 1;
  one.mean = x;
  merge(one);
}

void SampleSummary::merge(const SampleSummary& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(o.count);
  const double n = na + nb;
  const double d = o.mean - mean;
  const double d2 = d * d;
  const double new_m4 = m4 + o.m4 + d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                        6.0 * d2 * (na * na * o.m2 + nb * nb * m2) / (n * n) +
                        4.0 * d * (na * o.m3 - nb * m3) / n;
  const double new_m3 = m3 + o.m3 + d2 * d * na * nb * (na - nb) / (n * n) + 3.0 * d * (na * o.m2 - nb * m2) / n;
  const double new_m2 = m2 + o.m2 + d2 * na * nb / n;
  mean += d * nb / n;
  m2 = new_m2;
  m3 = new_m3;
  m4 = new_m4;
  count += o.count;
}

double SampleSummary::variance() const {
  return count < 2 ? 0.0 : std::max(0.0, m2 / static_cast<double>(count - 1));
}

double SampleSummary::sd() const { return std::sqrt(variance()); }

double SampleSummary::skewness() const {
  if (count < 2 || m2 <= 0.0) return 0.0;
  const double n = static_cast<double>(count);
  return std::sqrt(n) * m3 / std::pow(m2, 1.5);
}

double SampleSummary::kurtosis() const {
  if (count < 2 || m2 <= 0.0) return 0.0;
  const double n = static_cast<double>(count);
  return n * m4 / (m2 * m2) - 3.0;
}

double SampleSummary::mean_se() const {
  return count == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count));
}

double SampleSummary::variance_se() const {
  if (count < 2) return 0.0;
  const double n = static_cast<double>(count);
  const double mu4 = m4 / n;
  const double s2 = variance();
  return std::sqrt(std::max(0.0, (mu4 - s2 * s2 * (n - 3.0) / (n - 1.0)) / n));
}

SampleSummary summarize(std::span<const double> xs) {
  SampleSummary s;
  for (double x : xs) s.push(x);
  return s;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_one_sample_normal(std::span<const double> a, double mean, double sd) {
  if (!(sd > 0.0)) throw std::domain_error("ks_one_sample_normal: sd must be positive");
  if (a.empty()) throw std::invalid_argument("ks_one_sample_normal: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::sort(x.begin(), x.end());
  const boost::math::normal_distribution<double> normal(mean, sd);
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = boost::math::cdf(normal, x[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

Correlation correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("correlation: size mismatch");
  if (a.size() < 4) throw std::invalid_argument("correlation: need at least 4 points");
  const double n = static_cast<double>(a.size());
  double ma = 0.0;
  double mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  Correlation out;
  if (saa <= 0.0 || sbb <= 0.0) return out;
  out.r = std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
  const double z = std::atanh(std::clamp(out.r, -1.0 + 1e-15, 1.0 - 1e-15));
  const double half = 1.959963984540054 / std::sqrt(n - 3.0);
  out.lower = std::tanh(z - half);
  out.upper = std::tanh(z + half);
  return out;
}

RateFit loglog_rate(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("loglog_rate: size mismatch");
  if (xs.size() < 3) throw std::invalid_argument("loglog_rate: need at least 3 points");
  const std::size_t n = xs.size();
  std::vector<double> lx(n);
  std::vector<double> ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw std::domain_error("loglog_rate: inputs must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx <= 0.0) throw std::invalid_argument("loglog_rate: x values must not all be equal");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - fit.intercept - fit.slope * lx[i];
    rss += r * r;
  }
  const double dof = static_cast<double>(n - 2);
  fit.slope_se = std::sqrt(rss / dof / sxx);
  const boost::math::students_t_distribution<double> t(dof);
  const double q = boost::math::quantile(t, 0.975);
  fit.lower = fit.slope - q * fit.slope_se;
  fit.upper = fit.slope + q * fit.slope_se;
  return fit;
}

}  // namespace quartic
