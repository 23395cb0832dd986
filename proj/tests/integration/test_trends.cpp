#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "quartic/stats.hpp"
#include "quartic/sums.hpp"
#include "quartic/verify.hpp"

using namespace quartic;

namespace {

Workspace& shared_workspace() {
  static Workspace ws(0);
  return ws;
}

const std::vector<std::int64_t> kResolutions{256, 1024, 4096};

}  // namespace

TEST(trends, smoothed_bn_gap_shrinks) {
  // Fourth powers, so the block lattice of the smoothed process reaches t = 1 exactly.
  std::vector<double> gaps;
  for (std::int64_t n : {256, 1296, 4096}) {
    const Grid g(n, 1.0);
    const auto e = sample_kernel(shared_workspace(), CovKernel::heat(), g, 200, 21);
    double total = 0.0;
    for (std::size_t m = 0; m < e.replicates(); ++m) {
      const auto b = bn_process(e.path(m));
      const auto bbar = bn_smoothed(e.path(m));
      double sup = 0.0;
      for (std::size_t k = 0; k < b.values.size(); ++k) sup = std::max(sup, std::abs(b.values[k] - bbar.values[k]));
      total += sup;
    }
    gaps.push_back(total / static_cast<double>(e.replicates()));
  }
  EXPECT_LT(gaps[1], gaps[0]);
  EXPECT_LT(gaps[2], gaps[1]);
}

TEST(trends, trapezoid_splits_into_midpoint_sums) {
  // T slightly past 1 so the straddling sum has its last term at t = 1.
  const auto g = builtin("cube");
  std::vector<double> mses;
  for (std::int64_t n : kResolutions) {
    const Grid grid(n, 1.01);
    const auto e = sample_kernel(shared_workspace(), CovKernel::heat(), grid, 200, 22);
    double acc = 0.0;
    for (std::size_t m = 0; m < e.replicates(); ++m) {
      const auto p = e.path(m);
      const double d = trapezoid_sum(p, *g, 1).at(1.0) -
                       0.5 * (midpoint_sum(p, *g, 1).at(1.0) + offset_midpoint_sum(p, *g, 1).at(1.0));
      acc += d * d;
    }
    mses.push_back(acc / static_cast<double>(e.replicates()));
  }
  EXPECT_LT(mses[1], mses[0]);
  EXPECT_LT(mses[2], mses[1]);
}

TEST(trends, bn_variance_near_one) {
  const Grid g(4096, 1.0);
  const auto e = sample_kernel(shared_workspace(), CovKernel::heat(), g, 2000, 23);
  std::vector<double> b(e.replicates());
  for (std::size_t m = 0; m < b.size(); ++m) b[m] = bn_process(e.path(m)).at(1.0);
  EXPECT_NEAR(summarize(b).variance(), 1.0, 0.15);
}

TEST(trends, expansion_residual_shrinks_for_cube) {
  ExpansionOptions opt;
  opt.g = builtin("cube");
  opt.seed = 24;
  const auto rep = verify_expansion_residual(shared_workspace(), opt);
  EXPECT_TRUE(rep.check("mse_decreasing").passed) << rep.summary_text();
}

TEST(trends, quartic_sum_mean_near_six_over_pi) {
  const Grid g(1024, 1.0);
  const auto e = sample_kernel(shared_workspace(), CovKernel::heat(), g, 100, 25);
  const auto one = builtin("const");
  std::vector<double> v(e.replicates());
  for (std::size_t m = 0; m < v.size(); ++m)
    v[m] = power_sum(e.path(m), *one, 0, 4, Parity::All, EvalPoint::Left).at(1.0);
  EXPECT_NEAR(summarize(v).mean, 6.0 / std::numbers::pi, 0.05 * 6.0 / std::numbers::pi);
}

TEST(trends, trapezoid_ucp_for_fbm) {
  TrapezoidOptions opt;
  opt.kernel = CovKernel::fbm_quarter();
  opt.g = builtin("sine");
  opt.seed = 26;
  opt.probes = {0.5, 1.0};
  const auto rep = verify_trapezoid_ucp(shared_workspace(), opt);
  EXPECT_TRUE(rep.check("mse_decreasing").passed) << rep.summary_text();
}
