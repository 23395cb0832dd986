#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace quartic {

inline constexpr int kSummarySchemaVersion = 1;

enum class Relation { AtMost, AtLeast, Holds };

/// One pre-registered threshold comparison.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::AtMost;
  bool passed = false;
  bool asserted = true;  ///< unasserted checks are reported but never fail a run
  bool flagged = false;  ///< passed, but close enough to the threshold to deserve a look
  std::string note;
};

Check check_at_most(std::string name, double value, double threshold, bool asserted = true);
Check check_at_least(std::string name, double value, double threshold, bool asserted = true);
/// A boolean property; value is 1 or 0.
Check check_holds(std::string name, bool holds, std::string note = {}, bool asserted = true);

const char* to_string(Relation r);

struct ExperimentReport {
  std::string experiment;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json statistics = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  bool passed() const;
  const Check& check(const std::string& name) const;

  nlohmann::ordered_json summary_json() const;
  std::string summary_text() const;

  void write_csv(const std::filesystem::path& file) const;
  void write_summary(const std::filesystem::path& file) const;
};

}  // namespace quartic
