#include "quartic/runner.hpp"

#include <filesystem>
#include <fstream>

#include "quartic/functions.hpp"
#include "quartic/simulate.hpp"

namespace quartic {
namespace {

double tol(const ExperimentConfig& cfg, const std::string& key, double fallback) {
  const auto it = cfg.tolerances.find(key);
  return it == cfg.tolerances.end() ? fallback : it->second;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg, Workspace& ws) {
  const TestFunctionPtr g = builtin(cfg.g_id, cfg.g_params);
  ExperimentReport rep;
  if (cfg.experiment == "ito" || cfg.experiment == "fbm-window") {
    ItoOptions o;
    o.kernel = cfg.kernel;
    o.c = cfg.c;
    o.g = g;
    o.n = cfg.n_list.front();
    o.replicates = cfg.replicates;
    o.horizon = cfg.horizon;
    o.probes = cfg.probes;
    o.window_start = cfg.window_start;
    o.seed = cfg.seed;
    o.seeds = cfg.seeds;
    o.required = cfg.required;
    o.ks_threshold = tol(cfg, "ks", o.ks_threshold);
    o.mean_tolerance = tol(cfg, "mean", o.mean_tolerance);
    o.variance_tolerance = tol(cfg, "variance", o.variance_tolerance);
    o.ks_flag_factor = tol(cfg, "ks_flag_factor", o.ks_flag_factor);
    rep = verify_ito_formula(ws, o);
  } else if (cfg.experiment == "bn") {
    BnOptions o;
    o.kernel = cfg.kernel;
    o.n = cfg.n_list.front();
    o.replicates = cfg.replicates;
    o.horizon = cfg.horizon;
    o.probes = cfg.probes;
    o.seed = cfg.seed;
    o.ks_threshold = tol(cfg, "ks", o.ks_threshold);
    o.corr_threshold = tol(cfg, "corr", o.corr_threshold);
    o.ks_flag_factor = tol(cfg, "ks_flag_factor", o.ks_flag_factor);
    rep = verify_bn_limit(ws, o);
  } else if (cfg.experiment == "trapezoid") {
    TrapezoidOptions o;
    o.kernel = cfg.kernel;
    o.g = g;
    o.n_list = cfg.n_list;
    o.replicates = cfg.replicates;
    o.horizon = cfg.horizon;
    o.probes = cfg.probes;
    o.seed = cfg.seed;
    o.mse_fraction = tol(cfg, "mse_fraction", o.mse_fraction);
    o.max_inversions = static_cast<std::size_t>(tol(cfg, "max_inversions", 1.0));
    rep = verify_trapezoid_ucp(ws, o);
  } else if (cfg.experiment == "expansion") {
    ExpansionOptions o;
    o.kernel = cfg.kernel;
    o.g = g;
    o.n_list = cfg.n_list;
    o.replicates = cfg.replicates;
    o.horizon = cfg.horizon;
    o.t = cfg.probes.back();
    o.seed = cfg.seed;
    o.max_inversions = static_cast<std::size_t>(tol(cfg, "max_inversions", 1.0));
    rep = verify_expansion_residual(ws, o);
  } else {
    throw ConfigError({"experiment: unknown '" + cfg.experiment + "'"});
  }
  rep.experiment = cfg.experiment;
  rep.parameters["kernel_spec"] = kernel_to_json(cfg.kernel);
  return rep;
}

int run(const ExperimentConfig& cfg, std::size_t workers, std::ostream& log) {
  Workspace ws(workers);
  ExperimentReport rep;
  try {
    rep = run_experiment(cfg, ws);
  } catch (const NotPositiveDefinite& e) {
    log << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  rep.write_summary(dir / "summary.json");
  rep.write_csv(dir / "replicates.csv");
  log << rep.summary_text();
  return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace quartic
