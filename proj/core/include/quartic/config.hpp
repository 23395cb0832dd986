#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quartic/kernels.hpp"

namespace quartic {

/// Invalid configuration; what() lists every offending field, one per line.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::vector<std::string>& problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// One experiment run. The file format is JSON; see README for the schema.
struct ExperimentConfig {
  std::string experiment;  ///< ito, fbm-window, bn, trapezoid, expansion
  CovKernel kernel = CovKernel::heat();
  std::optional<double> c;
  std::string g_id = "square";
  std::vector<double> g_params;
  std::vector<std::int64_t> n_list;
  std::size_t replicates = 0;
  double horizon = 1.0;
  std::vector<double> probes{1.0};
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  std::size_t required = 1;
  double window_start = 0.0;
  std::map<std::string, double> tolerances;
  std::string output_dir = "out";
};

std::vector<std::string> experiment_names();

/// Parse and validate; unknown keys and out-of-range values raise ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& file);
nlohmann::json read_json_file(const std::filesystem::path& file);

/// {"kind": "Composite", "c": 1.25, "components": [...], "drift": [a0, a1, ...]}
CovKernel kernel_from_json(const nlohmann::json& j, const std::string& where = "kernel");
nlohmann::ordered_json kernel_to_json(const CovKernel& kernel);

/// Command-line shorthand: heat, fbm, xi, bm, fbm-split (= composite((pi/2)^{1/4}; heat, xi)).
CovKernel kernel_from_shorthand(const std::string& name);

}  // namespace quartic
