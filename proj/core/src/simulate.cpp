#include "quartic/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>

#include "quartic/parallel.hpp"
#include "quartic/rng.hpp"

namespace quartic {
namespace {

std::atomic<std::uint64_t> g_factorizations{0};

constexpr Eigen::Index kCholeskyBlock = 128;

struct PivotFailure {
  Eigen::Index index = -1;
  double value = 0.0;
};

// Right-looking blocked Cholesky on the lower triangle of a, in place.
// Returns the first pivot that falls below `threshold`, if any.
PivotFailure cholesky_in_place(Eigen::MatrixXd& a, double threshold) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; k += kCholeskyBlock) {
    const Eigen::Index kb = std::min(kCholeskyBlock, n - k);
    for (Eigen::Index j = k; j < k + kb; ++j) {
      double d = a(j, j);
      for (Eigen::Index p = k; p < j; ++p) d -= a(j, p) * a(j, p);
      if (!(d >= threshold)) return {j, d};
      const double pivot = std::sqrt(d);
      a(j, j) = pivot;
      for (Eigen::Index i = j + 1; i < k + kb; ++i) {
        double v = a(i, j);
        for (Eigen::Index p = k; p < j; ++p) v -= a(i, p) * a(j, p);
        a(i, j) = v / pivot;
      }
    }
    const Eigen::Index rest = n - k - kb;
    if (rest == 0) break;
    auto panel = a.block(k + kb, k, rest, kb);
    a.block(k, k, kb, kb).triangularView<Eigen::Lower>().transpose().solveInPlace<Eigen::OnTheRight>(panel);
    a.block(k + kb, k + kb, rest, rest).selfadjointView<Eigen::Lower>().rankUpdate(panel, -1.0);
  }
  return {};
}

void fill_normals(std::uint64_t key, std::span<double> out) {
  NormalStream stream(key);
  for (double& z : out) z = stream.next();
}

}  // namespace

std::vector<std::uint64_t> replicate_keys(std::uint64_t seed, std::size_t replicates, StreamRole role) {
  std::vector<std::uint64_t> keys(replicates);
  for (std::size_t m = 0; m < replicates; ++m) keys[m] = derive_stream_key(seed, m, role);
  return keys;
}

NotPositiveDefinite::NotPositiveDefinite(std::size_t pivot, double value)
    : std::runtime_error("covariance matrix is not positive definite: pivot " +
                         std::to_string(pivot) + " = " + std::to_string(value) +
                         " after diagonal jitter"),
      pivot_(pivot),
      value_(value) {}

std::uint64_t matrix_fingerprint(const Eigen::MatrixXd& m) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  auto feed = [&h](const void* p, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001B3ull;
    }
  };
  const std::int64_t dims[2] = {m.rows(), m.cols()};
  feed(dims, sizeof dims);
  feed(m.data(), sizeof(double) * static_cast<std::size_t>(m.size()));
  return h;
}

CholeskyFactor factorize(const Eigen::MatrixXd& cov, std::string source_id) {
  if (cov.rows() != cov.cols() || cov.rows() == 0)
    throw std::invalid_argument("factorize: matrix must be square and nonempty");
  ++g_factorizations;

  CholeskyFactor out;
  out.fingerprint = matrix_fingerprint(cov);
  out.source_id = std::move(source_id);
  const double max_diag = cov.diagonal().maxCoeff();
  if (!(max_diag > 0.0)) throw NotPositiveDefinite(0, max_diag);
  const double threshold = 1e-12 * max_diag;

  out.lower = cov;
  PivotFailure fail = cholesky_in_place(out.lower, threshold);
  if (fail.index >= 0) {
    out.jitter = threshold;
    out.lower = cov;
    out.lower.diagonal().array() += threshold;
    fail = cholesky_in_place(out.lower, threshold);
    if (fail.index >= 0) throw NotPositiveDefinite(static_cast<std::size_t>(fail.index), fail.value);
  }
  out.lower.triangularView<Eigen::StrictlyUpper>().setZero();
  return out;
}

CholeskyFactor factorize(const CovKernel& kernel, const Grid& grid) {
  return factorize(build_cov_matrix(kernel, grid), kernel.id());
}

std::uint64_t factorization_count() { return g_factorizations.load(); }

PathEnsemble::PathEnsemble(Grid grid, std::size_t replicates, std::string kernel_id,
                           std::uint64_t seed, std::vector<std::uint64_t> replicate_seeds)
    : grid_(grid),
      replicates_(replicates),
      kernel_id_(std::move(kernel_id)),
      seed_(seed),
      replicate_seeds_(std::move(replicate_seeds)),
      values_(replicates * grid.points(), 0.0) {
  if (replicates_ == 0) throw std::invalid_argument("ensemble: need at least one replicate");
  if (replicate_seeds_.size() != replicates_)
    throw std::invalid_argument("ensemble: one derived seed per replicate is required");
}

PathView PathEnsemble::path(std::size_t m) const {
  return {grid_, std::span<const double>(values_).subspan(m * points(), points())};
}

std::span<double> PathEnsemble::mutable_path(std::size_t m) {
  return std::span<double>(values_).subspan(m * points(), points());
}

PathEnsemble sample_paths(const CholeskyFactor& factor, const Grid& grid, std::size_t replicates,
                          std::uint64_t seed, std::size_t workers) {
  if (factor.size() != grid.steps())
    throw std::invalid_argument("sample_paths: factor size " + std::to_string(factor.size()) +
                                " does not match grid steps " + std::to_string(grid.steps()));
  if (replicates == 0) throw std::invalid_argument("sample_paths: M must be at least 1");

  auto keys = replicate_keys(seed, replicates, StreamRole::Process);
  PathEnsemble ens(grid, replicates, factor.source_id, seed, keys);
  const auto steps = static_cast<Eigen::Index>(grid.steps());
  const std::size_t batches = (replicates + kSampleBatch - 1) / kSampleBatch;
  const auto lower = factor.lower.triangularView<Eigen::Lower>();

  parallel_for(batches, workers, [&](std::size_t b) {
    const std::size_t first = b * kSampleBatch;
    const std::size_t count = std::min(kSampleBatch, replicates - first);
    Eigen::MatrixXd z(steps, static_cast<Eigen::Index>(count));
    for (std::size_t c = 0; c < count; ++c)
      fill_normals(keys[first + c], {z.col(static_cast<Eigen::Index>(c)).data(), grid.steps()});
    const Eigen::MatrixXd x = lower * z;
    for (std::size_t c = 0; c < count; ++c) {
      auto row = ens.mutable_path(first + c);
      row[0] = 0.0;
      std::memcpy(row.data() + 1, x.col(static_cast<Eigen::Index>(c)).data(),
                  sizeof(double) * grid.steps());
    }
  });
  return ens;
}

PathEnsemble sample_brownian(const Grid& grid, std::size_t replicates, std::uint64_t seed,
                             std::size_t workers) {
  auto keys = replicate_keys(seed, replicates, StreamRole::Brownian);
  PathEnsemble bm(grid, replicates, "bm", seed, keys);
  const double sd = std::sqrt(grid.dt());
  parallel_for(replicates, workers, [&](std::size_t m) {
    NormalStream stream(keys[m]);
    auto row = bm.mutable_path(m);
    row[0] = 0.0;
    for (std::size_t j = 1; j < row.size(); ++j) row[j] = row[j - 1] + sd * stream.next();
  });
  return bm;
}

CoupledEnsemble sample_coupled(const CholeskyFactor& factor, const Grid& grid,
                               std::size_t replicates, std::uint64_t seed, std::size_t workers) {
  PathEnsemble process = sample_paths(factor, grid, replicates, seed, workers);
  return {std::move(process), sample_brownian(grid, replicates, seed, workers)};
}

PathEnsemble add_deterministic_drift(PathEnsemble ensemble, const Drift& drift) {
  const Grid& grid = ensemble.grid();
  std::vector<double> shift(grid.points());
  for (std::size_t j = 0; j < shift.size(); ++j) shift[j] = drift(grid.time(j));
  for (std::size_t m = 0; m < ensemble.replicates(); ++m) {
    auto row = ensemble.mutable_path(m);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] += shift[j];
  }
  ensemble.set_drift_id(drift.id);
  return ensemble;
}

}  // namespace quartic
