#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quartic/grid.hpp"
#include "quartic/kernels.hpp"
#include "quartic/rng.hpp"

namespace quartic {

/// Thrown when a covariance matrix cannot be factored even after jitter.
class NotPositiveDefinite : public std::runtime_error {
 public:
  NotPositiveDefinite(std::size_t pivot, double value);
  std::size_t pivot() const { return pivot_; }
  double value() const { return value_; }

 private:
  std::size_t pivot_;
  double value_;
};

struct CholeskyFactor {
  Eigen::MatrixXd lower;
  std::uint64_t fingerprint = 0;  ///< hash of the source matrix
  std::string source_id;
  double jitter = 0.0;  ///< diagonal shift applied before the successful attempt

  std::size_t size() const { return static_cast<std::size_t>(lower.rows()); }
};

/// Hash of the matrix bytes (dimensions included).
std::uint64_t matrix_fingerprint(const Eigen::MatrixXd& m);

/// Lower Cholesky factor L with L L^T = cov. If a pivot drops below
/// 1e-12 * max diagonal, the whole diagonal is shifted by that amount and the
/// factorization is retried once; a second failure throws NotPositiveDefinite.
CholeskyFactor factorize(const Eigen::MatrixXd& cov, std::string source_id = {});

/// Factor of build_cov_matrix(kernel, grid), tagged with kernel.id().
CholeskyFactor factorize(const CovKernel& kernel, const Grid& grid);

/// Process-wide count of factorize() calls.
std::uint64_t factorization_count();

/// A single path on a grid: values at t_0..t_N.
struct PathView {
  Grid grid;
  std::span<const double> values;

  double operator[](std::size_t j) const { return values[j]; }
  double increment(std::size_t j) const { return values[j] - values[j - 1]; }
};

/// M sampled paths, row-major M x (N + 1).
class PathEnsemble {
 public:
  PathEnsemble(Grid grid, std::size_t replicates, std::string kernel_id, std::uint64_t seed,
               std::vector<std::uint64_t> replicate_seeds);

  const Grid& grid() const { return grid_; }
  std::size_t replicates() const { return replicates_; }
  std::size_t points() const { return grid_.points(); }

  PathView path(std::size_t m) const;
  std::span<double> mutable_path(std::size_t m);
  double at(std::size_t m, std::size_t j) const { return values_[m * points() + j]; }

  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }

  const std::string& kernel_id() const { return kernel_id_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& replicate_seeds() const { return replicate_seeds_; }
  const std::string& drift_id() const { return drift_id_; }
  void set_drift_id(std::string id) { drift_id_ = std::move(id); }

 private:
  Grid grid_;
  std::size_t replicates_;
  std::string kernel_id_;
  std::uint64_t seed_;
  std::vector<std::uint64_t> replicate_seeds_;
  std::string drift_id_ = "zero";
  std::vector<double> values_;
};

/// Replicates per batched product L Z. Fixed so a path's bits never depend
/// on how many workers ran.
inline constexpr std::size_t kSampleBatch = 32;

/// Paths L z with z from the Process stream of each replicate; column 0 is 0.
PathEnsemble sample_paths(const CholeskyFactor& factor, const Grid& grid, std::size_t replicates,
                          std::uint64_t seed, std::size_t workers = 1);

/// Standard Brownian motion from N(0, dt) increments of the Brownian stream
/// of each replicate.
PathEnsemble sample_brownian(const Grid& grid, std::size_t replicates, std::uint64_t seed,
                             std::size_t workers = 1);

/// Replicate seeds of the given stream role, as stored in an ensemble.
std::vector<std::uint64_t> replicate_keys(std::uint64_t seed, std::size_t replicates, StreamRole role);

struct CoupledEnsemble {
  PathEnsemble process;
  PathEnsemble brownian;  ///< independent standard Brownian motion on the same grid
};

/// Process paths plus sample_brownian() with the same seed.
CoupledEnsemble sample_coupled(const CholeskyFactor& factor, const Grid& grid,
                               std::size_t replicates, std::uint64_t seed,
                               std::size_t workers = 1);

/// values[m][j] += drift(t_j).
PathEnsemble add_deterministic_drift(PathEnsemble ensemble, const Drift& drift);

}  // namespace quartic
