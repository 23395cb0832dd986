#include "quartic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quartic/analytic.hpp"
#include "quartic/ensemble_io.hpp"
#include "quartic/rng.hpp"
#include "quartic/stats.hpp"
#include "quartic/sums.hpp"

namespace quartic {
namespace {

using json = nlohmann::ordered_json;

void require_g(const TestFunctionPtr& g, int k, int r) {
  if (!g) throw std::invalid_argument("experiment needs an integrand g");
  if (!g->smoothness().certifies(k, r))
    throw std::invalid_argument("integrand '" + g->id() + "' is not certified C^{" + std::to_string(k) + ",1}_" +
                                std::to_string(r));
}

void require_probes(const std::vector<double>& probes, double horizon) {
  if (probes.empty()) throw std::invalid_argument("at least one probe time is required");
  for (double t : probes)
    if (!(t > 0.0) || t > horizon) throw std::invalid_argument("probe times must lie in (0, T]");
}

void require_increasing(const std::vector<std::int64_t>& ns) {
  if (ns.empty()) throw std::invalid_argument("n list must not be empty");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw std::invalid_argument("n list must be strictly increasing");
}

std::size_t lattice_index(const Grid& grid, double t) {
  const std::size_t k = grid.index_at(t);
  return k - k % 2;
}

double time_integral(PathView x, const TestFunction& g, std::size_t k0, std::size_t k1) {
  if (k1 <= k0) return 0.0;
  double acc = 0.0;
  double left = g.dt(x[k0], x.grid.time(k0));
  for (std::size_t j = k0 + 1; j <= k1; ++j) {
    const double right = g.dt(x[j], x.grid.time(j));
    acc += 0.5 * (left + right);
    left = right;
  }
  return acc * x.grid.dt();
}

double telescoped_target(PathView x, const TestFunction& g, std::size_t k0, std::size_t k1) {
  return g.eval(x[k1], x.grid.time(k1)) - g.eval(x[k0], x.grid.time(k0)) - time_integral(x, g, k0, k1);
}

Check ks_check(std::string name, double value, double threshold, double flag_factor) {
  Check c = check_at_most(std::move(name), value, threshold * flag_factor);
  c.threshold = threshold;
  c.flagged = c.passed && value > threshold;
  if (flag_factor != 1.0) c.note = "fails above " + std::to_string(flag_factor) + "x threshold";
  return c;
}

std::vector<double> column(const std::vector<double>& rowmajor, std::size_t cols, std::size_t c) {
  std::vector<double> out(rowmajor.size() / cols);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rowmajor[i * cols + c];
  return out;
}

double mean_square(const std::vector<double>& xs) {
  double acc = 0.0;
  for (double x : xs) acc += x * x;
  return xs.empty() ? 0.0 : acc / static_cast<double>(xs.size());
}

std::string label_t(double t) { return "t=" + format_double(t); }

bool analytic_square(const TestFunction& g, const CovKernel& kernel) {
  return g.id() == "square" && kernel.centered();
}

}  // namespace

const CholeskyFactor& Workspace::factor(const CovKernel& kernel, const Grid& grid) {
  const std::string key = kernel.with_drift(Drift::zero()).id() + "|" + std::to_string(grid.n()) + "|" +
                          format_double(grid.horizon());
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, factorize(kernel, grid)).first;
  return it->second;
}

bool is_deterministic(const CovKernel& kernel) {
  if (kernel.kind() != KernelKind::Composite) return false;
  const auto parts = kernel.components();
  const bool scaled_zero = kernel.scale() == 0.0 || is_deterministic(parts[0]);
  return scaled_zero && (parts.size() < 2 || is_deterministic(parts[1]));
}

PathEnsemble sample_kernel(Workspace& ws, const CovKernel& kernel, const Grid& grid, std::size_t replicates,
                           std::uint64_t seed) {
  PathEnsemble ens = is_deterministic(kernel)
                         ? PathEnsemble(grid, replicates, kernel.id(), seed,
                                        replicate_keys(seed, replicates, StreamRole::Process))
                         : sample_paths(ws.factor(kernel, grid), grid, replicates, seed, ws.workers());
  if (!kernel.centered()) {
    std::vector<double> mean(grid.points());
    for (std::size_t j = 0; j < mean.size(); ++j) mean[j] = kernel.mean(grid.time(j));
    for (std::size_t m = 0; m < replicates; ++m) {
      auto row = ens.mutable_path(m);
      for (std::size_t j = 0; j < row.size(); ++j) row[j] += mean[j];
    }
    ens.set_drift_id(kernel.drift().is_zero() ? "mean" : kernel.drift().id);
  }
  return ens;
}

CoupledEnsemble sample_kernel_coupled(Workspace& ws, const CovKernel& kernel, const Grid& grid,
                                      std::size_t replicates, std::uint64_t seed) {
  PathEnsemble x = sample_kernel(ws, kernel, grid, replicates, seed);
  return {std::move(x), sample_brownian(grid, replicates, seed, ws.workers())};
}

double ito_scale(const CovKernel& kernel) {
  if (is_deterministic(kernel)) return 0.0;
  switch (kernel.kind()) {
    case KernelKind::Heat: return 1.0;
    case KernelKind::FbmQuarter: return fbm_decomposition_scale();
    case KernelKind::LeiNualartXi: return 0.0;
    case KernelKind::Composite: {
      const auto& a = kernel.components()[0];
      if (a.kind() == KernelKind::Heat) return kernel.scale();
      if (a.kind() == KernelKind::LeiNualartXi || kernel.scale() == 0.0) return 0.0;
      break;
    }
    case KernelKind::BrownianMotion: break;
  }
  throw std::invalid_argument("no Ito scale is defined for kernel '" + kernel.id() + "'; pass c explicitly");
}

double midpoint_between(PathView x, const TestFunction& g, int deriv_order, std::size_t k0, std::size_t k1) {
  if (k0 % 2 != 0 || k1 % 2 != 0) throw std::invalid_argument("midpoint_between: indices must be even");
  if (k0 > k1 || k1 > x.grid.steps()) throw std::invalid_argument("midpoint_between: bad index range");
  double acc = 0.0;
  for (std::size_t k = k0 + 2; k <= k1; k += 2)
    acc += g.dx(deriv_order, x[k - 1], x.grid.time(k - 1)) * (x[k] - x[k - 2]);
  return acc;
}

double rhs_formula_between(PathView x, PathView b, const TestFunction& g, std::size_t k0, std::size_t k1,
                           double c) {
  if (!(x.grid == b.grid) || x.values.size() != b.values.size())
    throw std::invalid_argument("rhs_formula: X and B must share a grid");
  if (k0 > k1 || k1 > x.grid.steps()) throw std::invalid_argument("rhs_formula: bad index range");
  double ito = 0.0;
  if (c != 0.0)
    for (std::size_t j = k0 + 1; j <= k1; ++j) ito += g.dx(2, x[j - 1], x.grid.time(j - 1)) * b.increment(j);
  return telescoped_target(x, g, k0, k1) - 0.5 * kappa_value() * c * c * ito;
}

double rhs_formula(PathView x, PathView b, const TestFunction& g, double t, double c) {
  if (!(x.grid == b.grid)) throw std::invalid_argument("rhs_formula: X and B must share a grid");
  return rhs_formula_between(x, b, g, 0, x.grid.index_at(t), c);
}

double trapezoid_target(PathView x, const TestFunction& g, double t) {
  return telescoped_target(x, g, 0, x.grid.index_at(t));
}

std::uint64_t run_seed(std::uint64_t master, std::size_t run, std::size_t runs) {
  return runs <= 1 ? master : derive_stream_key(master, run, StreamRole::Auxiliary);
}

Check decreasing_check(std::string name, const std::vector<double>& values, std::size_t max_inversions,
                       double floor) {
  std::size_t inversions = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1] && values[i] > floor) ++inversions;
  const bool overall = values.empty() || values.back() < values.front() || values.back() <= floor;
  std::string note = "inversions=" + std::to_string(inversions) + " allowed=" + std::to_string(max_inversions) +
                     (overall ? " last<first" : " last>=first") + " floor=" + format_double(floor);
  return check_holds(std::move(name), inversions <= max_inversions && overall, std::move(note));
}

ExperimentReport verify_trapezoid_ucp(Workspace& ws, const TrapezoidOptions& opt) {
  require_g(opt.g, 7, 3);
  require_increasing(opt.n_list);
  require_probes(opt.probes, opt.horizon);
  if (opt.replicates < 1) throw std::invalid_argument("trapezoid experiment needs at least 1 replicate");
  const TestFunction& g = *opt.g;

  ExperimentReport rep;
  rep.experiment = "trapezoid";
  rep.parameters = {{"kernel", opt.kernel.id()}, {"g", g.id()},          {"n", opt.n_list},
                    {"M", opt.replicates},      {"T", opt.horizon},      {"probes", opt.probes},
                    {"seed", opt.seed},         {"mse_fraction", opt.mse_fraction},
                    {"max_inversions", opt.max_inversions}};
  rep.columns = {"n", "replicate", "t", "difference"};

  const std::size_t P = opt.probes.size();
  std::vector<double> sup_mse;
  std::vector<double> final_ratio(P, 0.0);
  std::vector<double> variance(P, 0.0);
  std::string variance_source;
  json per_n = json::array();
  for (std::size_t ni = 0; ni < opt.n_list.size(); ++ni) {
    const Grid grid(opt.n_list[ni], opt.horizon);
    const PathEnsemble ens = sample_kernel(ws, opt.kernel, grid, opt.replicates, opt.seed);
    std::vector<double> diff(opt.replicates * P);
    std::vector<double> gval(opt.replicates * P);
    parallel_for(opt.replicates, ws.workers(), [&](std::size_t m) {
      const PathView path = ens.path(m);
      const StepSeries tn = trapezoid_sum(path, g, 1);
      for (std::size_t p = 0; p < P; ++p) {
        const std::size_t k = grid.index_at(opt.probes[p]);
        diff[m * P + p] = tn.values[k] - trapezoid_target(path, g, opt.probes[p]);
        gval[m * P + p] = g.eval(path[k], grid.time(k));
      }
    });
    json entry;
    entry["n"] = opt.n_list[ni];
    json mses = json::array();
    double sup = 0.0;
    for (std::size_t p = 0; p < P; ++p) {
      const double mse = mean_square(column(diff, P, p));
      mses.push_back(mse);
      sup = std::max(sup, mse);
      if (ni + 1 == opt.n_list.size()) {
        const std::size_t k = grid.index_at(opt.probes[p]);
        if (analytic_square(g, opt.kernel)) {
          const double r = opt.kernel.covariance(grid.time(k), grid.time(k));
          variance[p] = 2.0 * r * r;
          variance_source = "analytic";
        } else {
          const auto gv = column(gval, P, p);
          variance[p] = summarize(gv).variance();
          variance_source = "sample";
        }
        final_ratio[p] = variance[p] > 0.0 ? mse / variance[p] : (mse == 0.0 ? 0.0 : INFINITY);
      }
    }
    entry["mse"] = std::move(mses);
    entry["sup_mse"] = sup;
    per_n.push_back(std::move(entry));
    sup_mse.push_back(sup);
    for (std::size_t m = 0; m < opt.replicates; ++m)
      for (std::size_t p = 0; p < P; ++p)
        rep.rows.push_back({static_cast<double>(opt.n_list[ni]), static_cast<double>(m), opt.probes[p],
                            diff[m * P + p]});
  }
  const double scale = std::max(1.0, *std::max_element(variance.begin(), variance.end()));
  const double floor = 1e-20 * scale;
  rep.statistics["per_n"] = std::move(per_n);
  rep.statistics["reference_variance"] = variance;
  rep.statistics["reference_variance_source"] = variance_source;
  rep.statistics["final_mse_ratio"] = final_ratio;
  rep.statistics["numerical_floor"] = floor;
  rep.checks.push_back(decreasing_check("mse_decreasing", sup_mse, opt.max_inversions, floor));
  rep.checks.push_back(check_at_most("final_mse_ratio", *std::max_element(final_ratio.begin(), final_ratio.end()),
                                     opt.mse_fraction));
  return rep;
}

ExperimentReport verify_ito_formula(Workspace& ws, const ItoOptions& opt) {
  require_g(opt.g, 9, 4);
  require_probes(opt.probes, opt.horizon);
  if (opt.replicates < 2) throw std::invalid_argument("ito experiment needs at least 2 replicates");
  if (opt.seeds == 0 || opt.required == 0 || opt.required > opt.seeds)
    throw std::invalid_argument("ito experiment: need 1 <= required <= seeds");
  if (opt.window_start < 0.0) throw std::invalid_argument("window start must be nonnegative");
  const TestFunction& g = *opt.g;
  const double c = opt.c ? *opt.c : ito_scale(opt.kernel);
  const double kappa = kappa_value();
  const Grid grid(opt.n, opt.horizon);
  const std::size_t k0 = lattice_index(grid, opt.window_start);
  const std::size_t P = opt.probes.size();
  std::vector<std::size_t> k1(P);
  for (std::size_t p = 0; p < P; ++p) {
    k1[p] = lattice_index(grid, opt.probes[p]);
    if (k1[p] <= k0) throw std::invalid_argument("probe times must lie past the window start");
  }

  ExperimentReport rep;
  rep.experiment = "ito";
  rep.parameters = {{"kernel", opt.kernel.id()},
                    {"c", c},
                    {"g", g.id()},
                    {"n", opt.n},
                    {"M", opt.replicates},
                    {"T", opt.horizon},
                    {"probes", opt.probes},
                    {"window_start", opt.window_start},
                    {"seed", opt.seed},
                    {"seeds", opt.seeds},
                    {"required", opt.required},
                    {"ks_threshold", opt.ks_threshold},
                    {"mean_tolerance", opt.mean_tolerance},
                    {"variance_tolerance", opt.variance_tolerance},
                    {"ks_flag_factor", opt.ks_flag_factor}};
  rep.statistics["kappa"] = kappa;
  rep.columns = {"run", "replicate", "t", "sample_a", "sample_b"};

  const bool analytic = analytic_square(g, opt.kernel);
  json runs = json::array();
  std::size_t runs_passed = 0;
  for (std::size_t r = 0; r < opt.seeds; ++r) {
    const std::uint64_t seed = run_seed(opt.seed, r, opt.seeds);
    const CoupledEnsemble ens = sample_kernel_coupled(ws, opt.kernel, grid, opt.replicates, seed);
    std::vector<double> a(opt.replicates * P);
    std::vector<double> b(opt.replicates * P);
    parallel_for(opt.replicates, ws.workers(), [&](std::size_t m) {
      const PathView x = ens.process.path(m);
      const PathView bm = ens.brownian.path(m);
      for (std::size_t p = 0; p < P; ++p) {
        a[m * P + p] = midpoint_between(x, g, 1, k0, k1[p]);
        b[m * P + p] = rhs_formula_between(x, bm, g, k0, k1[p], c);
      }
    });
    json run;
    run["seed"] = seed;
    json probes = json::array();
    bool run_ok = true;
    for (std::size_t p = 0; p < P; ++p) {
      const auto sa = column(a, P, p);
      const auto sb = column(b, P, p);
      const SampleSummary ma = summarize(sa);
      const SampleSummary mb = summarize(sb);
      double mean_ref = mb.mean;
      double var_ref = mb.variance();
      if (analytic) {
        const double t0 = grid.time(k0);
        const double t1 = grid.time(k1[p]);
        const double r00 = opt.kernel.covariance(t0, t0);
        const double r11 = opt.kernel.covariance(t1, t1);
        const double r01 = opt.kernel.covariance(t0, t1);
        mean_ref = r11 - r00;
        var_ref = 2.0 * (r11 * r11 + r00 * r00 - 2.0 * r01 * r01) + kappa * kappa * std::pow(c, 4) * (t1 - t0);
      }
      const double ks = ks_two_sample(sa, sb);
      const double mean_diff = std::abs(ma.mean - mean_ref);
      const double var_dev = std::abs(ma.variance() / var_ref - 1.0);
      const std::string tag = (opt.seeds > 1 ? "run" + std::to_string(r) + "." : std::string()) +
                              label_t(opt.probes[p]);
      Check ks_c = ks_check("ks@" + tag, ks, opt.ks_threshold, opt.ks_flag_factor);
      Check mean_c = check_at_most("mean_diff@" + tag, mean_diff, opt.mean_tolerance);
      Check var_c = check_at_most("variance_ratio_dev@" + tag, var_dev, opt.variance_tolerance);
      run_ok = run_ok && ks_c.passed && mean_c.passed && var_c.passed;
      for (Check* ch : {&ks_c, &mean_c, &var_c}) {
        ch->asserted = opt.seeds == 1;
        rep.checks.push_back(*ch);
      }
      probes.push_back({{"t", opt.probes[p]},
                        {"t_end", grid.time(k1[p])},
                        {"ks", ks},
                        {"mean_a", ma.mean},
                        {"mean_b", mb.mean},
                        {"mean_ref", mean_ref},
                        {"mean_diff", mean_diff},
                        {"mean_a_se", ma.mean_se()},
                        {"var_a", ma.variance()},
                        {"var_b", mb.variance()},
                        {"var_ref", var_ref},
                        {"variance_ratio", ma.variance() / var_ref},
                        {"reference_source", analytic ? "analytic" : "sample_b"}});
    }
    run["probes"] = std::move(probes);
    run["passed"] = run_ok;
    runs.push_back(std::move(run));
    if (run_ok) ++runs_passed;
    for (std::size_t m = 0; m < opt.replicates; ++m)
      for (std::size_t p = 0; p < P; ++p)
        rep.rows.push_back({static_cast<double>(r), static_cast<double>(m), opt.probes[p], a[m * P + p],
                            b[m * P + p]});
  }
  rep.statistics["window_start_index"] = k0;
  rep.statistics["runs"] = std::move(runs);
  rep.statistics["runs_passed"] = runs_passed;
  if (opt.seeds > 1) {
    Check guard = check_at_least("runs_passed", static_cast<double>(runs_passed), static_cast<double>(opt.required));
    rep.checks.push_back(guard);
  }
  return rep;
}

ExperimentReport verify_bn_limit(Workspace& ws, const BnOptions& opt) {
  require_probes(opt.probes, opt.horizon);
  if (opt.replicates < 4) throw std::invalid_argument("bn experiment needs at least 4 replicates");
  const Grid grid(opt.n, opt.horizon);
  const std::size_t P = opt.probes.size();
  const double t_ref = *std::max_element(opt.probes.begin(), opt.probes.end());
  const double t_half = 0.5 * t_ref;

  ExperimentReport rep;
  rep.experiment = "bn";
  rep.parameters = {{"kernel", opt.kernel.id()}, {"n", opt.n},
                    {"M", opt.replicates},      {"T", opt.horizon},
                    {"probes", opt.probes},     {"seed", opt.seed},
                    {"ks_threshold", opt.ks_threshold}, {"corr_threshold", opt.corr_threshold},
                    {"ks_flag_factor", opt.ks_flag_factor}};
  rep.columns = {"replicate", "t", "bn", "x"};

  const PathEnsemble ens = sample_kernel(ws, opt.kernel, grid, opt.replicates, opt.seed);
  std::vector<double> bn(opt.replicates * P);
  std::vector<double> xv(opt.replicates * P);
  std::vector<double> b_ref(opt.replicates);
  std::vector<double> b_half(opt.replicates);
  parallel_for(opt.replicates, ws.workers(), [&](std::size_t m) {
    const PathView path = ens.path(m);
    const StepSeries s = bn_process(path);
    for (std::size_t p = 0; p < P; ++p) {
      bn[m * P + p] = s.at(opt.probes[p]);
      xv[m * P + p] = path[grid.index_at(opt.probes[p])];
    }
    b_ref[m] = s.at(t_ref);
    b_half[m] = s.at(t_half);
  });

  json per_t = json::array();
  for (std::size_t p = 0; p < P; ++p) {
    const double t = opt.probes[p];
    auto scaled = column(bn, P, p);
    const SampleSummary raw = summarize(scaled);
    for (double& v : scaled) v /= std::sqrt(t);
    const double ks = ks_one_sample_normal(scaled);
    const Correlation cx = correlation(b_ref, column(xv, P, p));
    rep.checks.push_back(ks_check("ks_normal@" + label_t(t), ks, opt.ks_threshold, opt.ks_flag_factor));
    rep.checks.push_back(check_at_most("abs_corr_bn_x@" + label_t(t), std::abs(cx.r), opt.corr_threshold));
    per_t.push_back({{"t", t},
                     {"mean", raw.mean},
                     {"variance", raw.variance()},
                     {"variance_se", raw.variance_se()},
                     {"ks_normal", ks},
                     {"corr_bn_ref_x", cx.r},
                     {"corr_ci", {cx.lower, cx.upper}}});
  }
  std::vector<double> incr(opt.replicates);
  double fourth = 0.0;
  for (std::size_t m = 0; m < opt.replicates; ++m) {
    incr[m] = b_ref[m] - b_half[m];
    fourth += std::pow(incr[m], 4);
  }
  fourth /= static_cast<double>(opt.replicates);
  const Correlation ortho = correlation(incr, b_half);
  rep.checks.push_back(check_at_most("abs_corr_increment", std::abs(ortho.r), opt.corr_threshold));
  const double bmom_c = fourth / ((t_ref - t_half) * (t_ref - t_half));
  rep.statistics["per_t"] = std::move(per_t);
  rep.statistics["t_ref"] = t_ref;
  rep.statistics["corr_increment"] = ortho.r;
  rep.statistics["corr_increment_ci"] = {ortho.lower, ortho.upper};
  rep.statistics["increment_fourth_moment"] = fourth;
  rep.statistics["bmom_constant"] = bmom_c;
  for (std::size_t m = 0; m < opt.replicates; ++m)
    for (std::size_t p = 0; p < P; ++p)
      rep.rows.push_back({static_cast<double>(m), opt.probes[p], bn[m * P + p], xv[m * P + p]});
  return rep;
}

ExperimentReport verify_expansion_residual(Workspace& ws, const ExpansionOptions& opt) {
  require_g(opt.g, 7, 3);
  require_increasing(opt.n_list);
  require_probes({opt.t}, opt.horizon);
  if (opt.replicates < 1) throw std::invalid_argument("expansion experiment needs at least 1 replicate");
  const TestFunction& g = *opt.g;

  ExperimentReport rep;
  rep.experiment = "expansion";
  rep.parameters = {{"kernel", opt.kernel.id()}, {"g", g.id()}, {"n", opt.n_list}, {"M", opt.replicates},
                    {"T", opt.horizon},          {"t", opt.t},  {"seed", opt.seed},
                    {"max_inversions", opt.max_inversions}};
  rep.columns = {"n", "replicate", "residual"};

  std::vector<double> mses;
  std::vector<double> ns;
  double scale = 1.0;
  json per_n = json::array();
  for (std::size_t ni = 0; ni < opt.n_list.size(); ++ni) {
    const Grid grid(opt.n_list[ni], opt.horizon);
    const std::size_t k = lattice_index(grid, opt.t);
    const PathEnsemble ens = sample_kernel(ws, opt.kernel, grid, opt.replicates, opt.seed);
    std::vector<double> res(opt.replicates);
    std::vector<double> gval(opt.replicates);
    parallel_for(opt.replicates, ws.workers(), [&](std::size_t m) {
      const PathView path = ens.path(m);
      const double in = midpoint_sum(path, g, 1).values[k];
      const double jn = alt_qv_weighted(path, g, 2).values[k];
      res[m] = in - (telescoped_target(path, g, 0, k) - 0.5 * jn);
      gval[m] = g.eval(path[k], grid.time(k));
    });
    const double mse = mean_square(res);
    if (ni + 1 == opt.n_list.size()) scale = std::max(1.0, summarize(gval).variance());
    mses.push_back(mse);
    ns.push_back(static_cast<double>(opt.n_list[ni]));
    per_n.push_back({{"n", opt.n_list[ni]}, {"mse", mse}, {"mean", summarize(res).mean}});
    for (std::size_t m = 0; m < opt.replicates; ++m)
      rep.rows.push_back({static_cast<double>(opt.n_list[ni]), static_cast<double>(m), res[m]});
  }
  const double floor = 1e-20 * scale;
  rep.statistics["per_n"] = std::move(per_n);
  rep.statistics["numerical_floor"] = floor;
  const bool fit_ok = ns.size() >= 3 && std::all_of(mses.begin(), mses.end(), [&](double v) { return v > floor; });
  if (fit_ok) {
    const RateFit fit = loglog_rate(ns, mses);
    rep.statistics["mse_rate"] = {{"slope", fit.slope}, {"lower", fit.lower}, {"upper", fit.upper}};
  }
  rep.checks.push_back(decreasing_check("mse_decreasing", mses, opt.max_inversions, floor));
  return rep;
}

}  // namespace quartic
