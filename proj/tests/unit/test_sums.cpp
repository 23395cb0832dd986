#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "quartic/analytic.hpp"
#include "quartic/sums.hpp"

using namespace quartic;

namespace {

struct OwnedPath {
  Grid grid;
  std::vector<double> x;

  PathView view() const { return {grid, x}; }
};

OwnedPath hand_path(std::int64_t n, std::vector<double> x) {
  const double T = static_cast<double>(x.size() - 1) / static_cast<double>(n);
  return {Grid(n, T), std::move(x)};
}

OwnedPath random_path(std::int64_t n, double T, unsigned seed) {
  Grid g(n, T);
  std::mt19937 gen(seed);
  std::normal_distribution<double> z(0.0, 0.3);
  std::vector<double> x(g.points(), 0.0);
  for (std::size_t j = 1; j < x.size(); ++j) x[j] = x[j - 1] + z(gen);
  return {g, std::move(x)};
}

TestFunctionPtr poly(std::vector<double> c) { return builtin("poly_k", c); }

using Oracle = std::function<double(const OwnedPath&, std::size_t k)>;

void expect_matches(const StepSeries& s, const OwnedPath& p, const Oracle& oracle, const char* what) {
  ASSERT_EQ(s.values.size(), p.grid.points());
  for (std::size_t k = 0; k < s.values.size(); ++k)
    EXPECT_NEAR(s.values[k], oracle(p, k), 1e-12) << what << " n=" << p.grid.n() << " k=" << k;
}

double dx(const OwnedPath& p, std::size_t j) { return p.x[j] - p.x[j - 1]; }

}  // namespace

TEST(sums, hand_path_examples) {
  const auto p = hand_path(4, {0.0, 1.0, -1.0, 2.0, 0.0});
  const auto lin = builtin("linear");
  EXPECT_DOUBLE_EQ(midpoint_sum(p.view(), *lin).at(1.0), 1.0);
  EXPECT_DOUBLE_EQ(offset_midpoint_sum(p.view(), *lin).at(1.0), -1.0);
  EXPECT_DOUBLE_EQ(trapezoid_sum(p.view(), *lin).at(1.0), 0.0);
  const auto half_square = poly({0.0, 0.0, 0.5});
  EXPECT_DOUBLE_EQ(midpoint_sum(p.view(), *half_square, 1).at(1.0), 1.0);
  EXPECT_DOUBLE_EQ(trapezoid_sum(p.view(), *half_square, 1).at(1.0), 0.0);
}

TEST(sums, two_step_examples) {
  const double a = 0.7, b = -0.4;
  const auto p = hand_path(2, {0.0, a, b});
  const auto g = builtin("poly_xt");
  const double jn = -g->eval(0.0, 0.0) * a * a + g->eval(a, 0.5) * (b - a) * (b - a);
  EXPECT_NEAR(alt_qv_weighted(p.view(), *g).at(1.0), jn, 1e-15);
  EXPECT_NEAR(bn_process(p.view()).at(1.0), (-a * a + (b - a) * (b - a)) / kappa_value(), 1e-15);
  EXPECT_NEAR(qn_process(p.view()).at(1.0), -a * a + (b - a) * (b - a), 1e-15);
}

TEST(sums, empty_sums_before_first_pair) {
  const auto p = random_path(8, 1.0, 3);
  const auto g = builtin("cube");
  const double early = 1.5 / 8.0;
  EXPECT_EQ(midpoint_sum(p.view(), *g).at(early), 0.0);
  EXPECT_EQ(offset_midpoint_sum(p.view(), *g).at(early), 0.0);
  EXPECT_EQ(alt_qv_weighted(p.view(), *g).at(early), 0.0);
  EXPECT_EQ(bn_process(p.view()).at(early), 0.0);
  EXPECT_EQ(qn_process(p.view()).at(early), 0.0);
  EXPECT_EQ(trapezoid_sum(p.view(), *g).at(0.5 / 8.0), 0.0);
  EXPECT_NE(trapezoid_sum(p.view(), *g).at(early), 0.0);
  for (auto f : {Functional::Midpoint, Functional::Offset, Functional::Trapezoid, Functional::Jn, Functional::Bn,
                 Functional::Qn, Functional::Power})
    EXPECT_EQ(evaluate({f, g}, p.view()).values[0], 0.0) << to_string(f);
}

TEST(sums, telescoping_with_constant_integrand) {
  const auto p = random_path(10, 1.0, 5);
  const auto one = builtin("const");
  const auto mid = midpoint_sum(p.view(), *one);
  const auto off = offset_midpoint_sum(p.view(), *one);
  const auto trap = trapezoid_sum(p.view(), *one);
  for (std::size_t k = 0; k <= 10; ++k) {
    const std::size_t even = 2 * (k / 2);
    EXPECT_NEAR(mid.values[k], p.x[even] - p.x[0], 1e-14);
    EXPECT_NEAR(trap.values[k], p.x[k] - p.x[0], 1e-14);
    if (even >= 2 && even + 1 <= 10) EXPECT_NEAR(off.values[k], p.x[even + 1] - p.x[1], 1e-14);
  }
}

TEST(sums, jn_bn_qn_agree) {
  const auto p = random_path(64, 1.0, 9);
  const auto one = builtin("const");
  const auto jn = alt_qv_weighted(p.view(), *one);
  const auto bn = bn_process(p.view());
  const auto qn = qn_process(p.view());
  for (std::size_t k = 0; k <= 64; ++k) {
    EXPECT_NEAR(jn.values[k], kappa_value() * bn.values[k], 1e-13);
    EXPECT_NEAR(qn.values[k], kappa_value() * bn.values[k], 1e-13);
  }
}

TEST(sums, trapezoid_is_exact_for_linear_integrand) {
  const auto p = random_path(50, 1.0, 11);
  const auto sq = builtin("square");
  const auto trap = trapezoid_sum(p.view(), *sq, 1);
  for (std::size_t k = 0; k <= 50; ++k) EXPECT_NEAR(trap.values[k], p.x[k] * p.x[k] - p.x[0] * p.x[0], 1e-13);
}

TEST(sums, smoothed_bn_index_arithmetic) {
  EXPECT_EQ(smoothing_resolution(16), 2);
  EXPECT_EQ(smoothing_resolution(80), 2);
  EXPECT_EQ(smoothing_resolution(81), 3);
  EXPECT_EQ(smoothing_resolution(4096), 8);
  const auto p = random_path(16, 2.0, 13);
  const auto bbar = bn_smoothed(p.view());
  const auto bn = bn_process(p.view());
  EXPECT_NEAR(bbar.at(1.0), bn.at(1.0), 1e-15);
  EXPECT_NEAR(bbar.at(2.0), bn.at(2.0), 1e-15);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(bbar.values[k], 0.0);
  for (std::size_t k = 16; k < 32; ++k) EXPECT_EQ(bbar.values[k], bbar.values[16]);
  EXPECT_THROW(bn_smoothed(random_path(15, 2.0, 1).view()), std::domain_error);
}

TEST(sums, smoothed_bn_jumps_on_coarse_lattice) {
  const std::int64_t n = 4096;
  const auto p = random_path(n, 1.0, 17);
  const auto bbar = bn_smoothed(p.view());
  const std::size_t stride = static_cast<std::size_t>(n) * 2 / 8;
  for (std::size_t k = 1; k < bbar.values.size(); ++k)
    if (bbar.values[k] != bbar.values[k - 1]) EXPECT_EQ(k % stride, 0u) << k;
}

TEST(sums, parity_decomposition_is_exact) {
  const auto p = random_path(33, 1.0, 19);
  const auto g = builtin("sine");
  for (int power : {3, 4})
    for (auto at : {EvalPoint::Left, EvalPoint::Right}) {
      const auto all = power_sum(p.view(), *g, 0, power, Parity::All, at);
      const auto odd = power_sum(p.view(), *g, 0, power, Parity::Odd, at);
      const auto even = power_sum(p.view(), *g, 0, power, Parity::Even, at);
      for (std::size_t k = 0; k < all.values.size(); ++k)
        EXPECT_NEAR(all.values[k], odd.values[k] + even.values[k], 1e-15);
    }
  EXPECT_THROW(power_sum(p.view(), *g, 0, 2, Parity::All, EvalPoint::Left), std::domain_error);
  EXPECT_THROW(power_sum(p.view(), *g, 0, 5, Parity::All, EvalPoint::Left), std::domain_error);
}

TEST(sums, index_sets_match_definitions) {
  const auto g = builtin("poly_xt");
  auto gv = [&](const OwnedPath& p, std::size_t i) { return g->eval(p.x[i], p.grid.time(i)); };
  for (std::int64_t n : {2, 3, 4, 5, 16}) {
    const auto p = random_path(n, 1.37, 100 + static_cast<unsigned>(n));
    const std::size_t steps = p.grid.steps();
    expect_matches(midpoint_sum(p.view(), *g), p, [&](const OwnedPath& q, std::size_t k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= k / 2; ++j) s += gv(q, 2 * j - 1) * (q.x[2 * j] - q.x[2 * j - 2]);
      return s;
    }, "midpoint");
    expect_matches(offset_midpoint_sum(p.view(), *g), p, [&](const OwnedPath& q, std::size_t k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= k / 2 && 2 * j + 1 <= steps; ++j)
        s += gv(q, 2 * j) * (q.x[2 * j + 1] - q.x[2 * j - 1]);
      return s;
    }, "offset");
    expect_matches(trapezoid_sum(p.view(), *g), p, [&](const OwnedPath& q, std::size_t k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= k; ++j) s += 0.5 * (gv(q, j - 1) + gv(q, j)) * dx(q, j);
      return s;
    }, "trapezoid");
    expect_matches(alt_qv_weighted(p.view(), *g), p, [&](const OwnedPath& q, std::size_t k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= 2 * (k / 2); ++j) s += gv(q, j - 1) * dx(q, j) * dx(q, j) * (j % 2 ? -1.0 : 1.0);
      return s;
    }, "jn");
    expect_matches(bn_process(p.view()), p, [&](const OwnedPath& q, std::size_t k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= 2 * (k / 2); ++j) s += dx(q, j) * dx(q, j) * (j % 2 ? -1.0 : 1.0);
      return s / kappa_value();
    }, "bn");
    expect_matches(qn_process(p.view()), p, [&](const OwnedPath& q, std::size_t k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= k / 2; ++j) s += dx(q, 2 * j) * dx(q, 2 * j) - dx(q, 2 * j - 1) * dx(q, 2 * j - 1);
      return s;
    }, "qn");
    for (int power : {3, 4})
      for (auto parity : {Parity::Odd, Parity::Even, Parity::All})
        for (auto at : {EvalPoint::Left, EvalPoint::Right})
          expect_matches(power_sum(p.view(), *g, 1, power, parity, at), p, [&](const OwnedPath& q, std::size_t k) {
            double s = 0.0;
            for (std::size_t j = 1; j <= k; ++j) {
              if (parity == Parity::Odd && j % 2 == 0) continue;
              if (parity == Parity::Even && j % 2 == 1) continue;
              const std::size_t i = at == EvalPoint::Left ? j - 1 : j;
              s += g->dx(1, q.x[i], q.grid.time(i)) * std::pow(dx(q, j), power);
            }
            return s;
          }, "power");
    if (n >= 16) {
      expect_matches(bn_smoothed(p.view()), p, [&](const OwnedPath& q, std::size_t k) {
        const double t = static_cast<double>(k) / static_cast<double>(n);
        const auto m = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.25) + 1e-9));
        const auto upper = 2 * m * m * m * static_cast<std::size_t>(std::floor(m * t / 2.0 + 1e-12));
        double s = 0.0;
        for (std::size_t j = 1; j <= upper; ++j) s += dx(q, j) * dx(q, j) * (j % 2 ? -1.0 : 1.0);
        return s / kappa_value();
      }, "bnbar");
    }
  }
}

TEST(sums, linear_in_integrand) {
  const auto p = random_path(40, 1.0, 23);
  const std::vector<double> c1{0.3, -1.0, 2.0, 0.5};
  const std::vector<double> c2{1.0, 0.0, -0.7, 0.0, 0.2};
  const double a = 1.7, b = -0.6;
  std::vector<double> mix(5, 0.0);
  for (std::size_t i = 0; i < mix.size(); ++i)
    mix[i] = a * (i < c1.size() ? c1[i] : 0.0) + b * (i < c2.size() ? c2[i] : 0.0);
  const auto g1 = poly(c1), g2 = poly(c2), gm = poly(mix);
  for (auto f : {Functional::Midpoint, Functional::Offset, Functional::Trapezoid, Functional::Jn, Functional::Power}) {
    const auto s1 = evaluate({f, g1}, p.view());
    const auto s2 = evaluate({f, g2}, p.view());
    const auto sm = evaluate({f, gm}, p.view());
    for (std::size_t k = 0; k < sm.values.size(); ++k)
      EXPECT_NEAR(sm.values[k], a * s1.values[k] + b * s2.values[k], 1e-12) << to_string(f);
  }
}

TEST(sums, names_round_trip) {
  for (auto f : {Functional::Midpoint, Functional::Offset, Functional::Trapezoid, Functional::Jn, Functional::Bn,
                 Functional::Qn, Functional::BnBar, Functional::Power})
    EXPECT_EQ(functional_from_string(to_string(f)), f);
  EXPECT_THROW(functional_from_string("simpson"), std::invalid_argument);
  EXPECT_EQ(parity_from_string("odd"), Parity::Odd);
  EXPECT_EQ(eval_point_from_string("right"), EvalPoint::Right);
  EXPECT_THROW(parity_from_string("both"), std::invalid_argument);
  EXPECT_THROW(eval_point_from_string("mid"), std::invalid_argument);
}

TEST(sums, evaluate_requires_integrand) {
  const auto p = random_path(8, 1.0, 1);
  EXPECT_THROW(evaluate({Functional::Midpoint, nullptr}, p.view()), std::invalid_argument);
  EXPECT_NO_THROW(evaluate({Functional::Bn, nullptr}, p.view()));
}

TEST(sums, evaluate_at_is_independent_of_workers) {
  const Grid g(128, 1.0);
  const auto e = sample_paths(factorize(CovKernel::heat(), g), g, 37, 4);
  const std::vector<double> probes{0.25, 0.5, 1.0};
  const FunctionalSpec spec{Functional::Jn, builtin("sine")};
  const auto one = evaluate_at(spec, e, probes, 1);
  const auto four = evaluate_at(spec, e, probes, 4);
  ASSERT_EQ(one.size(), 37u * 3u);
  EXPECT_EQ(one, four);
  const auto direct = alt_qv_weighted(e.path(5), *spec.g);
  EXPECT_EQ(one[5 * 3 + 1], direct.at(0.5));
}
