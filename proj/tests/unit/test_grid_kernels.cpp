#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "quartic/grid.hpp"
#include "quartic/kernels.hpp"

using namespace quartic;

namespace {

// Reference values evaluated with 30-digit arithmetic.
constexpr double kInvSqrtPi = 0.564189583547756286948;
constexpr double kHeatHalfOne = 0.206507720129041778112;
constexpr double kXiOneOne = 0.292893218813452475599;
constexpr double kXiOneFour = 0.381966011250105151795;
constexpr double kFbmOneFour = 0.633974596215561353236;
constexpr double kFbmScale = 1.119515134920247628542;

std::vector<CovKernel> all_kernels() {
  return {CovKernel::heat(), CovKernel::fbm_quarter(), CovKernel::lei_nualart_xi(), CovKernel::brownian_motion(),
          CovKernel::composite(kFbmScale, CovKernel::heat(), CovKernel::lei_nualart_xi())};
}

}  // namespace

TEST(grid, basic_layout) {
  const Grid g(4, 1.0);
  EXPECT_EQ(g.steps(), 4u);
  EXPECT_EQ(g.points(), 5u);
  EXPECT_DOUBLE_EQ(g.dt(), 0.25);
  EXPECT_DOUBLE_EQ(g.time(3), 0.75);
  EXPECT_EQ(g.index_at(0.6), 2u);
  EXPECT_EQ(g.index_at(1.0), 4u);
}

TEST(grid, non_integer_horizon) {
  const Grid g(10, 1.37);
  EXPECT_EQ(g.steps(), 13u);
  EXPECT_EQ(g.index_at(1.37), 13u);
}

TEST(grid, floor_guard) {
  EXPECT_EQ(floor_index(100, 0.29), 29u);
  EXPECT_EQ(floor_index(3, 1.0 / 3.0), 1u);
}

TEST(grid, rejects_bad_input) {
  EXPECT_THROW(Grid(1, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid(0, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid(4, -1.0), std::invalid_argument);
  const Grid g(4, 1.0);
  EXPECT_THROW(g.index_at(-0.1), std::domain_error);
  EXPECT_THROW(g.index_at(1.5), std::domain_error);
}

TEST(kernels, rho_heat_examples) {
  EXPECT_EQ(rho_heat(0.0, 0.5), 0.0);
  EXPECT_NEAR(rho_heat(1.0, 1.0), kInvSqrtPi, 1e-15);
  EXPECT_NEAR(rho_heat(0.5, 1.0), kHeatHalfOne, 1e-15);
  EXPECT_THROW(rho_heat(-1.0, 1.0), std::domain_error);
}

TEST(kernels, rho_xi_examples) {
  EXPECT_EQ(rho_xi_lei_nualart(0.0, 1.0), 0.0);
  EXPECT_NEAR(rho_xi_lei_nualart(1.0, 1.0), kXiOneOne, 1e-15);
  EXPECT_NEAR(rho_xi_lei_nualart(1.0, 4.0), kXiOneFour, 1e-15);
  EXPECT_THROW(rho_xi_lei_nualart(1.0, -2.0), std::domain_error);
}

TEST(kernels, rho_xi_integral_matches_closed_form) {
  EXPECT_NEAR(rho_xi_lei_nualart_integral(1.0, 1.0), kXiOneOne, 1e-8);
  EXPECT_NEAR(rho_xi_lei_nualart_integral(1.0, 4.0), kXiOneFour, 1e-8);
  for (double s : {0.01, 0.1, 0.5, 1.0, 2.5})
    for (double t : {0.02, 0.3, 1.0, 3.0})
      EXPECT_NEAR(rho_xi_lei_nualart_integral(s, t), rho_xi_lei_nualart(s, t), 1e-8) << s << "," << t;
}

TEST(kernels, rho_fbm_examples) {
  EXPECT_NEAR(rho_fbm_quarter(1.0, 1.0), 1.0, 1e-15);
  EXPECT_EQ(rho_fbm_quarter(0.0, 0.7), 0.0);
  EXPECT_NEAR(rho_fbm_quarter(1.0, 4.0), kFbmOneFour, 1e-15);
  EXPECT_THROW(rho_fbm_quarter(-0.1, 1.0), std::domain_error);
}

TEST(kernels, brownian) {
  EXPECT_EQ(rho_brownian(0.3, 0.7), 0.3);
  EXPECT_THROW(rho_brownian(-0.3, 0.7), std::domain_error);
}

TEST(kernels, decomposition_identity) {
  const double c = fbm_decomposition_scale();
  EXPECT_NEAR(c, kFbmScale, 1e-15);
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const double s = 0.05 * i;
      const double t = 0.07 * j;
      EXPECT_NEAR(c * c * rho_heat(s, t) + rho_xi_lei_nualart(s, t), rho_fbm_quarter(s, t), 1e-12);
    }
}

TEST(kernels, symmetric_and_anchored_at_zero) {
  for (const auto& k : all_kernels()) {
    for (int i = 0; i < 100; ++i) {
      const double s = 0.013 * i;
      EXPECT_EQ(k(0.0, s), 0.0) << k.id();
      for (int j = 0; j < 100; ++j) {
        const double t = 0.011 * j;
        EXPECT_EQ(k(s, t), k(t, s)) << k.id();
      }
    }
  }
}

TEST(kernels, heat_increment_band) {
  const int n = 128;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double s = static_cast<double>(i) / n;
      const double t = static_cast<double>(j) / n;
      const double v = rho_heat(t, t) - 2.0 * rho_heat(s, t) + rho_heat(s, s);
      const double d = std::sqrt(t - s);
      EXPECT_GE(v, d / std::sqrt(std::numbers::pi) * (1.0 - 1e-12));
      EXPECT_LE(v, 2.0 * d);
    }
}

TEST(kernels, composite_and_drift) {
  const auto k = CovKernel::composite(2.0, CovKernel::heat(), CovKernel::brownian_motion());
  EXPECT_NEAR(k(0.5, 1.0), 4.0 * rho_heat(0.5, 1.0) + 0.5, 1e-15);
  EXPECT_TRUE(k.centered());
  const auto d = k.with_drift(Drift::polynomial({1.0, 0.0, 3.0}));
  EXPECT_FALSE(d.centered());
  EXPECT_DOUBLE_EQ(d.mean(2.0), 13.0);
  EXPECT_EQ(d(0.5, 1.0), k(0.5, 1.0));
  EXPECT_NE(d.id(), k.id());
  EXPECT_EQ(CovKernel::heat().id(), "heat");
}

TEST(kernels, kind_names_round_trip) {
  for (auto kind : {KernelKind::Heat, KernelKind::FbmQuarter, KernelKind::LeiNualartXi, KernelKind::Composite,
                    KernelKind::BrownianMotion})
    EXPECT_EQ(kernel_kind_from_string(to_string(kind)), kind);
  EXPECT_THROW(kernel_kind_from_string("Cauchy"), std::invalid_argument);
}

TEST(cov_matrix, heat_single_point) {
  const auto m = build_cov_matrix(CovKernel::heat(), Grid(1, 2.0));
  ASSERT_EQ(m.rows(), 2);
  EXPECT_NEAR(m(0, 0), kInvSqrtPi, 1e-15);
}

TEST(cov_matrix, brownian_two_points) {
  const auto m = build_cov_matrix(CovKernel::brownian_motion(), Grid(2, 1.0));
  ASSERT_EQ(m.rows(), 2);
  EXPECT_EQ(m(0, 0), 0.5);
  EXPECT_EQ(m(0, 1), 0.5);
  EXPECT_EQ(m(1, 0), 0.5);
  EXPECT_EQ(m(1, 1), 1.0);
}

TEST(cov_matrix, exactly_symmetric) {
  for (const auto& k : all_kernels()) {
    const auto m = build_cov_matrix(k, Grid(37, 1.3));
    EXPECT_TRUE((m.array() == m.transpose().array()).all()) << k.id();
  }
}

TEST(cov_matrix, positive_semidefinite) {
  for (const auto& k : all_kernels()) {
    for (std::int64_t n : {16, 256, 1024}) {
      const auto m = build_cov_matrix(k, Grid(n, 1.0));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
      const auto& ev = es.eigenvalues();
      EXPECT_GE(ev.minCoeff(), -1e-8 * ev.maxCoeff()) << k.id() << " n=" << n;
    }
  }
}
