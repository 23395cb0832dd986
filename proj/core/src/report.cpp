#include "quartic/report.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "quartic/ensemble_io.hpp"
#include "quartic/version.hpp"

namespace quartic {

Check check_at_most(std::string name, double value, double threshold, bool asserted) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = threshold;
  c.relation = Relation::AtMost;
  c.passed = std::isfinite(value) && value <= threshold;
  c.asserted = asserted;
  return c;
}

Check check_at_least(std::string name, double value, double threshold, bool asserted) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = threshold;
  c.relation = Relation::AtLeast;
  c.passed = std::isfinite(value) && value >= threshold;
  c.asserted = asserted;
  return c;
}

Check check_holds(std::string name, bool holds, std::string note, bool asserted) {
  Check c;
  c.name = std::move(name);
  c.value = holds ? 1.0 : 0.0;
  c.threshold = 1.0;
  c.relation = Relation::Holds;
  c.passed = holds;
  c.asserted = asserted;
  c.note = std::move(note);
  return c;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::AtMost: return "<=";
    case Relation::AtLeast: return ">=";
    case Relation::Holds: return "holds";
  }
  return "?";
}

bool ExperimentReport::passed() const {
  for (const auto& c : checks)
    if (c.asserted && !c.passed) return false;
  return true;
}

const Check& ExperimentReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named '" + name + "'");
}

nlohmann::ordered_json ExperimentReport::summary_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSummarySchemaVersion;
  j["tool_version"] = kVersion;
  j["experiment"] = experiment;
  j["parameters"] = parameters;
  j["statistics"] = statistics;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["value"] = c.value;
    e["relation"] = to_string(c.relation);
    e["threshold"] = c.threshold;
    e["asserted"] = c.asserted;
    e["passed"] = c.passed;
    e["flagged"] = c.flagged;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["passed"] = passed();
  return j;
}

std::string ExperimentReport::summary_text() const {
  std::string out = experiment + (passed() ? ": PASS\n" : ": FAIL\n");
  for (const auto& c : checks) {
    out += "  " + std::string(c.passed ? "ok  " : (c.asserted ? "FAIL" : "warn")) + " " + c.name + " = " +
           format_double(c.value);
    if (c.relation != Relation::Holds) out += std::string(" ") + to_string(c.relation) + " " + format_double(c.threshold);
    if (c.flagged) out += " (flagged)";
    if (!c.note.empty()) out += "  [" + c.note + "]";
    out += "\n";
  }
  return out;
}

void ExperimentReport::write_csv(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
}

void ExperimentReport::write_summary(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << summary_json().dump(2) << "\n";
}

}  // namespace quartic
