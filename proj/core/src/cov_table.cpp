#include "quartic/cov_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quartic/kernels.hpp"

namespace quartic {
namespace {

constexpr std::size_t kMaxExamples = 50;

double t_of(std::int64_t n, std::int64_t j) { return static_cast<double>(j) / static_cast<double>(n); }

// E[F(t_a) dF_b] = rho(t_a, t_b) - rho(t_a, t_{b-1}).
double level_increment_cov(std::int64_t n, std::int64_t a, std::int64_t b) {
  return rho_heat(t_of(n, a), t_of(n, b)) - rho_heat(t_of(n, a), t_of(n, b - 1));
}

}  // namespace

double heat_increment_cov(std::int64_t n, std::int64_t i, std::int64_t j) {
  if (n < 1 || i < 1 || j < 1) throw std::domain_error("heat_increment_cov: indices must be positive");
  const double ti = t_of(n, i), ti1 = t_of(n, i - 1), tj = t_of(n, j), tj1 = t_of(n, j - 1);
  return rho_heat(ti, tj) - rho_heat(ti1, tj) - rho_heat(ti, tj1) + rho_heat(ti1, tj1);
}

double DiscreteCovTable::cross_at(std::size_t i, std::size_t j) const {
  if (!(i < j) || j - i > lag || j > maxj) throw std::out_of_range("cross_at: pair outside stored band");
  return cross[(j - 1) * lag + (j - i - 1)];
}

DiscreteCovTable discrete_cov_table(std::int64_t n, std::size_t maxj, std::size_t lag) {
  if (n < 1) throw std::domain_error("discrete_cov_table: n must be positive");
  if (maxj < 1) throw std::domain_error("discrete_cov_table: maxj must be positive");
  DiscreteCovTable tab;
  tab.n = n;
  tab.maxj = maxj;
  tab.lag = lag;
  tab.sigma_sq.resize(maxj);
  tab.sigma_hat.resize(maxj);
  tab.cross.assign(maxj * lag, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t j = 1; j <= maxj; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    tab.sigma_sq[j - 1] = heat_increment_cov(n, jj, jj);
    tab.sigma_hat[j - 1] = level_increment_cov(n, jj - 1, jj);
    for (std::size_t l = 1; l <= lag && l < j; ++l)
      tab.cross[(j - 1) * lag + (l - 1)] = heat_increment_cov(n, jj - static_cast<std::int64_t>(l), jj);
  }
  return tab;
}

CovAudit audit_cov_table(std::int64_t n, std::size_t maxj) {
  if (n < 1 || maxj < 1) throw std::domain_error("audit_cov_table: n and maxj must be positive");
  const double pi = std::numbers::pi;
  const double sdt = std::sqrt(1.0 / static_cast<double>(n));
  CovAudit audit;
  audit.n = n;
  audit.maxj = maxj;

  auto record = [&audit](InequalityViolation v) {
    if (audit.examples.size() < kMaxExamples) audit.examples.push_back(std::move(v));
  };

  for (std::size_t j = 1; j <= maxj; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    const double s2 = heat_increment_cov(n, jj, jj);

    const double centre = std::sqrt(2.0 / pi) * sdt;
    const double radius = std::pow(static_cast<double>(j), -1.5) * sdt;
    ++audit.sig2_checked;
    if (!(std::abs(s2 - centre) <= radius)) {
      ++audit.sig2_violations;
      record({"sig2", 0, j, s2, centre - radius, centre + radius});
    }

    const double lo = sdt / std::sqrt(pi);
    const double hi = 2.0 * sdt;
    ++audit.sig3_checked;
    if (!(s2 >= lo * (1.0 - kBandSlack) && s2 <= hi * (1.0 + kBandSlack))) {
      ++audit.sig3_violations;
      record({"sig3", 0, j, s2, lo, hi});
    }

    const double shat = level_increment_cov(n, jj - 1, jj);
    audit.sighat_ratio = std::max(audit.sighat_ratio,
        std::abs(shat + sdt / std::sqrt(2.0 * pi)) / (sdt / std::sqrt(static_cast<double>(j))));

    for (std::size_t i = 1; i <= j; ++i) {
      const auto ii = static_cast<std::int64_t>(i);
      const double scale = sdt / std::sqrt(static_cast<double>(std::max<std::size_t>(j - i, 1)));
      audit.sigdel_first_ratio =
          std::max(audit.sigdel_first_ratio, std::abs(level_increment_cov(n, ii - 1, jj)) / scale);
      audit.sigdel_third_ratio =
          std::max(audit.sigdel_third_ratio, std::abs(level_increment_cov(n, jj - 1, ii)) / scale);
      if (i == j) continue;
      const double c = heat_increment_cov(n, ii, jj);
      const double floor = -2.0 * std::pow(static_cast<double>(j - i), -1.5) * sdt;
      ++audit.cross_checked;
      if (!(c >= floor && c < 0.0)) {
        ++audit.cross_violations;
        record({"cross", i, j, c, floor, 0.0});
      }
    }
  }
  return audit;
}

}  // namespace quartic
