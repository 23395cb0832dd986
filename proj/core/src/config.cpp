#include "quartic/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "quartic/functions.hpp"

namespace quartic {
namespace {

using json = nlohmann::json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

const std::map<std::string, std::set<std::string>>& tolerance_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"ito", {"ks", "mean", "variance", "ks_flag_factor"}},
      {"fbm-window", {"ks", "mean", "variance", "ks_flag_factor"}},
      {"bn", {"ks", "corr", "ks_flag_factor"}},
      {"trapezoid", {"mse_fraction", "max_inversions"}},
      {"expansion", {"max_inversions"}}};
  return keys;
}

class Reader {
 public:
  explicit Reader(std::vector<std::string>& problems) : problems_(problems) {}

  template <class T, class Check>
  std::optional<T> get(const json& doc, const std::string& key, Check ok, const std::string& expect) {
    if (!doc.contains(key)) return std::nullopt;
    try {
      T v = doc.at(key).get<T>();
      if (ok(v)) return v;
    } catch (const json::exception&) {
    }
    problems_.push_back(key + ": expected " + expect);
    return std::nullopt;
  }

 private:
  std::vector<std::string>& problems_;
};

bool is_integral(const json& j) { return j.is_number_integer() || j.is_number_unsigned(); }

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& problems)
    : std::invalid_argument("invalid configuration:\n  " + join(problems, "\n  ")), problems_(problems) {}

std::vector<std::string> experiment_names() { return {"ito", "fbm-window", "bn", "trapezoid", "expansion"}; }

CovKernel kernel_from_shorthand(const std::string& name) {
  if (name == "heat") return CovKernel::heat();
  if (name == "fbm") return CovKernel::fbm_quarter();
  if (name == "xi") return CovKernel::lei_nualart_xi();
  if (name == "bm") return CovKernel::brownian_motion();
  if (name == "fbm-split")
    return CovKernel::composite(fbm_decomposition_scale(), CovKernel::heat(), CovKernel::lei_nualart_xi());
  throw std::invalid_argument("unknown kernel '" + name + "' (expected heat, fbm, xi, bm, fbm-split)");
}

CovKernel kernel_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return kernel_from_shorthand(j.get<std::string>());
  if (!j.is_object()) throw ConfigError({where + ": expected an object or a shorthand name"});
  std::vector<std::string> problems;
  for (const auto& [key, _] : j.items())
    if (key != "kind" && key != "c" && key != "components" && key != "drift")
      problems.push_back(where + "." + key + ": unknown key");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    problems.push_back(where + ".kind: required string");
    throw ConfigError(problems);
  }
  KernelKind kind{};
  try {
    kind = kernel_kind_from_string(j.at("kind").get<std::string>());
  } catch (const std::invalid_argument& e) {
    problems.push_back(where + ".kind: " + e.what());
    throw ConfigError(problems);
  }
  std::optional<CovKernel> kernel;
  if (kind == KernelKind::Composite) {
    if (!j.contains("c") || !j.at("c").is_number()) problems.push_back(where + ".c: required number for Composite");
    if (!j.contains("components") || !j.at("components").is_array() || j.at("components").empty() ||
        j.at("components").size() > 2)
      problems.push_back(where + ".components: expected an array of 1 or 2 kernels");
    if (problems.empty()) {
      const double c = j.at("c").get<double>();
      const auto& comps = j.at("components");
      CovKernel a = kernel_from_json(comps[0], where + ".components[0]");
      kernel = comps.size() == 1 ? CovKernel::composite(c, a)
                                 : CovKernel::composite(c, a, kernel_from_json(comps[1], where + ".components[1]"));
    }
  } else {
    if (j.contains("c")) problems.push_back(where + ".c: only allowed for Composite");
    if (j.contains("components")) problems.push_back(where + ".components: only allowed for Composite");
    switch (kind) {
      case KernelKind::Heat: kernel = CovKernel::heat(); break;
      case KernelKind::FbmQuarter: kernel = CovKernel::fbm_quarter(); break;
      case KernelKind::LeiNualartXi: kernel = CovKernel::lei_nualart_xi(); break;
      case KernelKind::BrownianMotion: kernel = CovKernel::brownian_motion(); break;
      case KernelKind::Composite: break;
    }
  }
  if (j.contains("drift")) {
    const auto& d = j.at("drift");
    if (!d.is_array() || d.empty() || !std::all_of(d.begin(), d.end(), [](const json& v) { return v.is_number(); }))
      problems.push_back(where + ".drift: expected a nonempty array of polynomial coefficients");
    else if (kernel)
      kernel = kernel->with_drift(Drift::polynomial(d.get<std::vector<double>>()));
  }
  if (!problems.empty()) throw ConfigError(problems);
  return *kernel;
}

nlohmann::ordered_json kernel_to_json(const CovKernel& kernel) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kernel.kind());
  if (kernel.kind() == KernelKind::Composite) {
    j["c"] = kernel.scale();
    auto comps = nlohmann::ordered_json::array();
    for (const auto& part : kernel.components()) comps.push_back(kernel_to_json(part));
    j["components"] = std::move(comps);
  }
  if (!kernel.drift().is_zero()) j["drift"] = kernel.drift().coeffs;
  return j;
}

nlohmann::json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError({"cannot open config file " + file.string()});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({file.string() + ": " + e.what()});
  }
}

ExperimentConfig load_config(const std::filesystem::path& file) { return parse_config(read_json_file(file)); }

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError({"top level: expected an object"});
  static const std::set<std::string> known{"experiment", "kernel", "c",        "g",        "n",
                                           "n_list",     "M",      "T",        "probes",   "seed",
                                           "seeds",      "required", "window_start", "tolerances", "output_dir"};
  std::vector<std::string> problems;
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) problems.push_back(key + ": unknown key");

  ExperimentConfig cfg;
  Reader rd(problems);
  const auto names = experiment_names();
  if (auto e = rd.get<std::string>(doc, "experiment", [&](const std::string& s) {
        return std::find(names.begin(), names.end(), s) != names.end();
      }, "one of " + join(names, ", ")))
    cfg.experiment = *e;
  else if (!doc.contains("experiment"))
    problems.push_back("experiment: required");

  const bool window = cfg.experiment == "fbm-window";
  if (window) {
    cfg.kernel = kernel_from_shorthand("fbm-split");
    cfg.window_start = 0.1;
  }
  if (doc.contains("kernel")) {
    try {
      cfg.kernel = kernel_from_json(doc.at("kernel"));
    } catch (const ConfigError& e) {
      problems.insert(problems.end(), e.problems().begin(), e.problems().end());
    } catch (const std::invalid_argument& e) {
      problems.push_back(std::string("kernel: ") + e.what());
    }
  }
  auto finite = [](double v) { return std::isfinite(v); };
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (auto c = rd.get<double>(doc, "c", finite, "a finite number")) cfg.c = *c;

  if (doc.contains("g")) {
    const auto& g = doc.at("g");
    if (g.is_string()) {
      cfg.g_id = g.get<std::string>();
    } else if (g.is_object()) {
      for (const auto& [key, _] : g.items())
        if (key != "id" && key != "params") problems.push_back("g." + key + ": unknown key");
      if (g.contains("id") && g.at("id").is_string())
        cfg.g_id = g.at("id").get<std::string>();
      else
        problems.push_back("g.id: required string");
      if (g.contains("params")) {
        const auto& p = g.at("params");
        if (p.is_array() && std::all_of(p.begin(), p.end(), [](const json& v) { return v.is_number(); }))
          cfg.g_params = p.get<std::vector<double>>();
        else
          problems.push_back("g.params: expected an array of numbers");
      }
    } else {
      problems.push_back("g: expected an id string or {id, params}");
    }
  }
  try {
    builtin(cfg.g_id, cfg.g_params);
  } catch (const std::exception& e) {
    problems.push_back(std::string("g: ") + e.what());
  }

  const bool multi_n = cfg.experiment == "trapezoid" || cfg.experiment == "expansion";
  if (doc.contains("n") && doc.contains("n_list")) problems.push_back("n, n_list: give only one");
  if (doc.contains("n")) {
    if (is_integral(doc.at("n")) && doc.at("n").get<std::int64_t>() >= 2)
      cfg.n_list = {doc.at("n").get<std::int64_t>()};
    else
      problems.push_back("n: expected an integer >= 2");
  } else if (doc.contains("n_list")) {
    const auto& l = doc.at("n_list");
    if (l.is_array() && !l.empty() && std::all_of(l.begin(), l.end(), [](const json& v) {
          return is_integral(v) && v.get<std::int64_t>() >= 2;
        }))
      cfg.n_list = l.get<std::vector<std::int64_t>>();
    else
      problems.push_back("n_list: expected a nonempty array of integers >= 2");
    if (!multi_n && cfg.n_list.size() > 1) problems.push_back("n_list: experiment takes a single n");
  } else {
    cfg.n_list = multi_n ? std::vector<std::int64_t>{256, 1024, 4096} : std::vector<std::int64_t>{4096};
  }
  for (std::size_t i = 1; i < cfg.n_list.size(); ++i)
    if (cfg.n_list[i] <= cfg.n_list[i - 1]) {
      problems.push_back("n_list: must be strictly increasing");
      break;
    }

  cfg.replicates = multi_n ? 200 : 1000;
  if (doc.contains("M")) {
    const std::int64_t min_m = multi_n ? 1 : (cfg.experiment == "bn" ? 4 : 2);
    if (is_integral(doc.at("M")) && doc.at("M").get<std::int64_t>() >= min_m)
      cfg.replicates = doc.at("M").get<std::size_t>();
    else
      problems.push_back("M: expected an integer >= " + std::to_string(min_m));
  }
  if (auto t = rd.get<double>(doc, "T", positive, "a positive number")) cfg.horizon = *t;
  if (doc.contains("probes")) {
    const auto& p = doc.at("probes");
    if (p.is_array() && !p.empty() && std::all_of(p.begin(), p.end(), [](const json& v) { return v.is_number(); }))
      cfg.probes = p.get<std::vector<double>>();
    else
      problems.push_back("probes: expected a nonempty array of times");
  }
  for (double t : cfg.probes)
    if (!(t > 0.0) || t > cfg.horizon) {
      problems.push_back("probes: every probe time must lie in (0, T]");
      break;
    }
  if (doc.contains("seed")) {
    if (is_integral(doc.at("seed")) && (doc.at("seed").is_number_unsigned() || doc.at("seed").get<std::int64_t>() >= 0))
      cfg.seed = doc.at("seed").get<std::uint64_t>();
    else
      problems.push_back("seed: expected a nonnegative integer");
  }
  for (const char* key : {"seeds", "required"}) {
    if (!doc.contains(key)) continue;
    if (is_integral(doc.at(key)) && doc.at(key).get<std::int64_t>() >= 1)
      (std::string(key) == "seeds" ? cfg.seeds : cfg.required) = doc.at(key).get<std::size_t>();
    else
      problems.push_back(std::string(key) + ": expected an integer >= 1");
  }
  if (doc.contains("seeds") && !doc.contains("required")) cfg.required = cfg.seeds;
  if (cfg.required > cfg.seeds) problems.push_back("required: must not exceed seeds");
  if (auto w = rd.get<double>(doc, "window_start", [](double v) { return std::isfinite(v) && v >= 0.0; },
                              "a nonnegative number"))
    cfg.window_start = *w;
  if (cfg.window_start >= *std::min_element(cfg.probes.begin(), cfg.probes.end()))
    problems.push_back("window_start: must be smaller than every probe time");

  if (doc.contains("tolerances")) {
    const auto& tol = doc.at("tolerances");
    if (!tol.is_object()) {
      problems.push_back("tolerances: expected an object");
    } else {
      const auto it = tolerance_keys().find(cfg.experiment);
      for (const auto& [key, v] : tol.items()) {
        if (it == tolerance_keys().end() || !it->second.count(key))
          problems.push_back("tolerances." + key + ": unknown for experiment '" + cfg.experiment + "'");
        else if (!v.is_number() || !(v.get<double>() > 0.0))
          problems.push_back("tolerances." + key + ": expected a positive number");
        else
          cfg.tolerances[key] = v.get<double>();
      }
    }
  }
  if (auto o = rd.get<std::string>(doc, "output_dir", [](const std::string& s) { return !s.empty(); },
                                   "a nonempty path"))
    cfg.output_dir = *o;

  if (!problems.empty()) throw ConfigError(problems);
  return cfg;
}

}  // namespace quartic
