#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quartic/analytic.hpp"
#include "quartic/config.hpp"
#include "quartic/cov_table.hpp"
#include "quartic/ensemble_io.hpp"
#include "quartic/functions.hpp"
#include "quartic/runner.hpp"
#include "quartic/sums.hpp"
#include "quartic/verify.hpp"
#include "quartic/version.hpp"

using namespace quartic;

namespace {

struct KappaArgs {
  double tol = 1e-6;
};

int cmd_kappa(const KappaArgs& a) {
  const KappaEstimate k = kappa(a.tol);
  std::cout << "kappa " << format_double(k.value) << "\n"
            << "terms " << k.terms << "\n"
            << "bound " << format_double(k.bound) << "\n";
  return kExitPass;
}

struct SumsArgs {
  std::string functional = "midpoint";
  std::string g = "linear";
  std::vector<double> params;
  int deriv = 0;
  int p = 4;
  std::string parity = "all";
  std::string eval_point = "left";
  std::vector<double> t{1.0};
  std::int64_t n = 1024;
  std::size_t M = 100;
  double T = 1.0;
  std::string kernel = "heat";
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string out;
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  return file;
}

int cmd_sums(const SumsArgs& a) {
  FunctionalSpec spec;
  spec.kind = functional_from_string(a.functional);
  spec.g = builtin(a.g, a.params);
  spec.deriv_order = a.deriv;
  spec.power = a.p;
  spec.parity = parity_from_string(a.parity);
  spec.eval_point = eval_point_from_string(a.eval_point);
  Workspace ws(a.workers);
  const Grid grid(a.n, a.T);
  const PathEnsemble ens = sample_kernel(ws, kernel_from_shorthand(a.kernel), grid, a.M, a.seed);
  const auto values = evaluate_at(spec, ens, a.t, ws.workers());
  std::ofstream file;
  std::ostream& os = open_out(a.out, file);
  os << "replicate,t,value\n";
  for (std::size_t m = 0; m < a.M; ++m)
    for (std::size_t p = 0; p < a.t.size(); ++p)
      os << m << "," << format_double(a.t[p]) << "," << format_double(values[m * a.t.size() + p]) << "\n";
  return kExitPass;
}

struct VerifyArgs {
  std::string experiment;
  std::string config;
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> n_list;
  std::optional<std::size_t> M;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> seeds;
  std::optional<std::size_t> required;
  std::string kernel;
  std::string g;
  std::vector<double> t;
  std::optional<double> window_start;
  std::optional<double> c;
  std::string out;
  std::size_t workers = 1;
};

int cmd_verify(const VerifyArgs& a) {
  nlohmann::json doc = a.config.empty() ? nlohmann::json::object() : read_json_file(a.config);
  if (!a.experiment.empty()) doc["experiment"] = a.experiment;
  if (a.n) {
    doc.erase("n_list");
    doc["n"] = *a.n;
  }
  if (!a.n_list.empty()) {
    doc.erase("n");
    doc["n_list"] = a.n_list;
  }
  if (a.M) doc["M"] = *a.M;
  if (a.seed) doc["seed"] = *a.seed;
  if (a.seeds) doc["seeds"] = *a.seeds;
  if (a.required) doc["required"] = *a.required;
  if (!a.kernel.empty()) doc["kernel"] = a.kernel;
  if (!a.g.empty()) doc["g"] = a.g;
  if (!a.t.empty()) doc["probes"] = a.t;
  if (a.window_start) doc["window_start"] = *a.window_start;
  if (a.c) doc["c"] = *a.c;
  if (!a.out.empty()) doc["output_dir"] = a.out;
  const ExperimentConfig cfg = parse_config(doc);
  return run(cfg, a.workers, std::cout);
}

struct SampleArgs {
  std::string kernel = "heat";
  std::int64_t n = 256;
  double T = 1.0;
  std::size_t M = 10;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  std::size_t workers = 1;
};

int cmd_sample(const SampleArgs& a) {
  Workspace ws(a.workers);
  const PathEnsemble ens = sample_kernel(ws, kernel_from_shorthand(a.kernel), Grid(a.n, a.T), a.M, a.seed);
  if (a.format == "bin") {
    if (a.out.empty() || a.out == "-") throw std::invalid_argument("binary output needs --out <file>");
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + a.out + " for writing");
    write_ensemble_binary(file, ens);
  } else {
    std::ofstream file;
    write_ensemble_csv(open_out(a.out, file), ens);
  }
  return kExitPass;
}

struct CovArgs {
  std::int64_t n = 4096;
  std::size_t maxj = 0;
  std::size_t lag = 8;
  std::string out;
};

int cmd_cov_table(const CovArgs& a) {
  const std::size_t maxj = a.maxj == 0 ? static_cast<std::size_t>(a.n) : a.maxj;
  if (!a.out.empty()) {
    const DiscreteCovTable table = discrete_cov_table(a.n, maxj, a.lag);
    std::ofstream file;
    std::ostream& os = open_out(a.out, file);
    os << "j,sigma_sq,sigma_hat";
    for (std::size_t l = 1; l <= a.lag; ++l) os << ",cross_" << l;
    os << "\n";
    for (std::size_t j = 1; j <= maxj; ++j) {
      os << j << "," << format_double(table.sigma_sq_at(j)) << "," << format_double(table.sigma_hat_at(j));
      for (std::size_t l = 1; l <= a.lag; ++l)
        os << "," << (l < j ? format_double(table.cross_at(j - l, j)) : std::string());
      os << "\n";
    }
  }
  const CovAudit audit = audit_cov_table(a.n, maxj);
  std::cerr << "n " << audit.n << " maxj " << audit.maxj << "\n"
            << "sig2  checked " << audit.sig2_checked << " violations " << audit.sig2_violations << "\n"
            << "sig3  checked " << audit.sig3_checked << " violations " << audit.sig3_violations << "\n"
            << "cross checked " << audit.cross_checked << " violations " << audit.cross_violations << "\n"
            << "sighat_ratio " << format_double(audit.sighat_ratio) << "\n"
            << "sigdel_first_ratio " << format_double(audit.sigdel_first_ratio) << "\n"
            << "sigdel_third_ratio " << format_double(audit.sigdel_third_ratio) << "\n";
  for (const auto& v : audit.examples)
    std::cerr << "violation " << v.inequality << " i=" << v.i << " j=" << v.j << " value=" << format_double(v.value)
              << " band=[" << format_double(v.lower) << ", " << format_double(v.upper) << "]\n";
  std::cerr << (audit.passed() ? "audit passed" : "audit FAILED") << "\n";
  return audit.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and verification tool for the quartic-variation process"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  KappaArgs ka;
  auto* kap = app.add_subcommand("compute-kappa", "Evaluate the series constant kappa with a certified bound");
  kap->add_option("--tol", ka.tol, "Tail tolerance")->check(CLI::PositiveNumber);

  SumsArgs sa;
  auto* sums = app.add_subcommand("sums", "Evaluate a discrete functional on sampled paths (CSV: replicate,t,value)");
  sums->add_option("--functional", sa.functional, "midpoint, offset, trapezoid, jn, bn, qn, bnbar, power");
  sums->add_option("--g", sa.g, "Integrand id");
  sums->add_option("--param", sa.params, "Integrand parameters");
  sums->add_option("--deriv", sa.deriv, "Spatial derivative order of g used as the integrand");
  sums->add_option("--p", sa.p, "Power for --functional power (3 or 4)");
  sums->add_option("--parity", sa.parity, "odd, even, all");
  sums->add_option("--eval-point", sa.eval_point, "left, right");
  sums->add_option("--t", sa.t, "Probe times")->delimiter(',');
  sums->add_option("--n", sa.n, "Grid points per unit time")->check(CLI::Range(2, 1 << 20));
  sums->add_option("--M", sa.M, "Replicates")->check(CLI::PositiveNumber);
  sums->add_option("--T", sa.T, "Horizon")->check(CLI::PositiveNumber);
  sums->add_option("--kernel", sa.kernel, "heat, fbm, xi, bm, fbm-split");
  sums->add_option("--seed", sa.seed, "Master seed");
  sums->add_option("--workers", sa.workers, "Worker threads (0 = all cores)");
  sums->add_option("--out", sa.out, "Output file (default stdout)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run a verification experiment; exit 0 iff all asserted checks pass");
  ver->add_option("--experiment", va.experiment, "ito, fbm-window, bn, trapezoid, expansion");
  ver->add_option("--config", va.config, "JSON config file")->check(CLI::ExistingFile);
  ver->add_option("--n", va.n, "Grid points per unit time");
  ver->add_option("--n-list", va.n_list, "Increasing list of n")->delimiter(',');
  ver->add_option("--M", va.M, "Replicates");
  ver->add_option("--seed", va.seed, "Master seed");
  ver->add_option("--seeds", va.seeds, "Independent runs");
  ver->add_option("--required", va.required, "Runs that must pass");
  ver->add_option("--kernel", va.kernel, "heat, fbm, xi, bm, fbm-split");
  ver->add_option("--g", va.g, "Integrand id");
  ver->add_option("--t", va.t, "Probe times")->delimiter(',');
  ver->add_option("--window-start", va.window_start, "Start of the time window");
  ver->add_option("--c", va.c, "Scale c of the rough component");
  ver->add_option("--out", va.out, "Output directory");
  ver->add_option("--workers", va.workers, "Worker threads (0 = all cores)");

  SampleArgs pa;
  auto* smp = app.add_subcommand("sample", "Dump sampled paths");
  smp->add_option("--kernel", pa.kernel, "heat, fbm, xi, bm, fbm-split");
  smp->add_option("--n", pa.n, "Grid points per unit time")->check(CLI::Range(2, 1 << 20));
  smp->add_option("--T", pa.T, "Horizon")->check(CLI::PositiveNumber);
  smp->add_option("--M", pa.M, "Replicates")->check(CLI::PositiveNumber);
  smp->add_option("--seed", pa.seed, "Master seed");
  smp->add_option("--format", pa.format, "csv or bin")->check(CLI::IsMember({"csv", "bin"}));
  smp->add_option("--out", pa.out, "Output file");
  smp->add_option("--workers", pa.workers, "Worker threads (0 = all cores)");

  CovArgs ca;
  auto* cov = app.add_subcommand("cov-table", "Dump increment covariances and audit their bounds");
  cov->add_option("--n", ca.n, "Grid points per unit time")->check(CLI::Range(2, 1 << 20));
  cov->add_option("--maxj", ca.maxj, "Largest increment index (default n)");
  cov->add_option("--lag", ca.lag, "Cross-covariance lags in the dump");
  cov->add_option("--out", ca.out, "CSV output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*kap) return cmd_kappa(ka);
    if (*sums) return cmd_sums(sa);
    if (*ver) return cmd_verify(va);
    if (*smp) return cmd_sample(pa);
    if (*cov) return cmd_cov_table(ca);
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
