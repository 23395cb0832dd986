#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartic/functions.hpp"
#include "quartic/kernels.hpp"
#include "quartic/parallel.hpp"
#include "quartic/report.hpp"
#include "quartic/simulate.hpp"

namespace quartic {

/// Worker count plus a cache of Cholesky factors keyed by (covariance, grid).
class Workspace {
 public:
  explicit Workspace(std::size_t workers = 1) : workers_(workers == 0 ? default_workers() : workers) {}

  std::size_t workers() const { return workers_; }
  const CholeskyFactor& factor(const CovKernel& kernel, const Grid& grid);
  std::size_t cached_factors() const { return cache_.size(); }

 private:
  std::size_t workers_;
  std::map<std::string, CholeskyFactor> cache_;
};

/// True when the covariance is identically zero (e.g. composite with c = 0
/// and no second component), so paths are the mean alone.
bool is_deterministic(const CovKernel& kernel);

/// Paths of the kernel with its mean added; no factorization for
/// deterministic kernels.
PathEnsemble sample_kernel(Workspace& ws, const CovKernel& kernel, const Grid& grid, std::size_t replicates,
                           std::uint64_t seed);

/// sample_kernel() plus an independent Brownian motion per replicate.
CoupledEnsemble sample_kernel_coupled(Workspace& ws, const CovKernel& kernel, const Grid& grid,
                                      std::size_t replicates, std::uint64_t seed);

/// The scale c with X = c F + (smooth part): 1 for heat, (pi/2)^{1/4} for
/// fBm, the composite scale when its first component is heat, 0 for xi or a
/// deterministic kernel. Throws std::invalid_argument otherwise.
double ito_scale(const CovKernel& kernel);

/// Midpoint sum of d_x^deriv g over the pairs (t_{2j-2}, t_{2j-1}, t_{2j}) inside
/// [t_k0, t_k1]. k0 and k1 must be even.
double midpoint_between(PathView x, const TestFunction& g, int deriv_order, std::size_t k0, std::size_t k1);

/// g(X(t_k1)) - g(X(t_k0)) - int_{t_k0}^{t_k1} d_t g(X(s), s) ds
///   - (kappa c^2 / 2) sum_{k0 < j <= k1} d_x^2 g(X(t_{j-1}), t_{j-1}) dB_j
/// with the time integral by the trapezoid rule on the grid.
double rhs_formula_between(PathView x, PathView b, const TestFunction& g, std::size_t k0, std::size_t k1,
                           double c);

/// rhs_formula_between() from 0 to floor(nt).
double rhs_formula(PathView x, PathView b, const TestFunction& g, double t, double c);

/// g(X(t_k), t_k) - g(X(0), 0) - int_0^{t_k} d_t g(X(s), s) ds with k = floor(nt).
double trapezoid_target(PathView x, const TestFunction& g, double t);

struct TrapezoidOptions {
  CovKernel kernel = CovKernel::heat();
  TestFunctionPtr g;
  std::vector<std::int64_t> n_list{256, 1024, 4096};
  std::size_t replicates = 200;
  double horizon = 1.0;
  std::vector<double> probes{1.0};
  std::uint64_t seed = 1;
  double mse_fraction = 0.01;  ///< final MSE must be below this fraction of Var g(X(t))
  std::size_t max_inversions = 1;
};

ExperimentReport verify_trapezoid_ucp(Workspace& ws, const TrapezoidOptions& opt);

struct ItoOptions {
  CovKernel kernel = CovKernel::heat();
  std::optional<double> c;  ///< defaults to ito_scale(kernel)
  TestFunctionPtr g;
  std::int64_t n = 4096;
  std::size_t replicates = 1000;
  double horizon = 1.0;
  std::vector<double> probes{1.0};
  double window_start = 0.0;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;  ///< independent runs; seeds > 1 derives one seed per run
  std::size_t required = 1;
  double ks_threshold = 0.10;
  double mean_tolerance = 0.05;
  double variance_tolerance = 0.15;
  double ks_flag_factor = 1.5;  ///< KS up to this multiple of the threshold is flagged, not failed
};

ExperimentReport verify_ito_formula(Workspace& ws, const ItoOptions& opt);

/// Seed of run r in a multi-seed experiment.
std::uint64_t run_seed(std::uint64_t master, std::size_t run, std::size_t runs);

struct BnOptions {
  CovKernel kernel = CovKernel::heat();
  std::int64_t n = 4096;
  std::size_t replicates = 1000;
  double horizon = 1.0;
  std::vector<double> probes{1.0};
  std::uint64_t seed = 1;
  double ks_threshold = 0.06;
  double corr_threshold = 0.1;
  double ks_flag_factor = 1.5;
};

ExperimentReport verify_bn_limit(Workspace& ws, const BnOptions& opt);

struct ExpansionOptions {
  CovKernel kernel = CovKernel::heat();
  TestFunctionPtr g;
  std::vector<std::int64_t> n_list{256, 1024, 4096};
  std::size_t replicates = 200;
  double horizon = 1.0;
  double t = 1.0;
  std::uint64_t seed = 1;
  std::size_t max_inversions = 1;
};

ExperimentReport verify_expansion_residual(Workspace& ws, const ExpansionOptions& opt);

/// Decreasing-trend test used by the ucp experiments: at most max_inversions
/// increases between consecutive values, and last < first. Values at or
/// below floor count as converged.
Check decreasing_check(std::string name, const std::vector<double>& values, std::size_t max_inversions,
                       double floor);

}  // namespace quartic
