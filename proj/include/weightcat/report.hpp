// Structured pass/fail reports for scenario runs, rendered as JSON (for
// machines) and as aligned plain text (for humans).  Rendering is fully
// deterministic: identical inputs produce byte-identical output, so report
// files can be diffed and frozen as fixtures.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace weightcat {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string details;  // exact values (dimensions, traces, bounds) as text
};

struct ScenarioReport {
  std::string scenario;
  std::vector<CheckLine> checks;

  void record(const std::string& name, bool pass, std::string details = "") {
    checks.push_back({name, pass, std::move(details)});
  }

  bool ok() const {
    if (checks.empty()) return false;
    for (const CheckLine& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct RunReport {
  std::string model = "model";
  std::uint64_t seed = 1;
  int bound = 8;
  std::vector<ScenarioReport> scenarios;  // kept sorted by scenario name

  void add(ScenarioReport rep) {
    auto it = std::lower_bound(
        scenarios.begin(), scenarios.end(), rep,
        [](const ScenarioReport& a, const ScenarioReport& b) { return a.scenario < b.scenario; });
    scenarios.insert(it, std::move(rep));
  }

  bool ok() const {
    for (const ScenarioReport& s : scenarios)
      if (!s.ok()) return false;
    return true;
  }
};

inline nlohmann::ordered_json scenario_json(const ScenarioReport& rep) {
  nlohmann::ordered_json doc;
  doc["scenario"] = rep.scenario;
  doc["ok"] = rep.ok();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckLine& c : rep.checks)
    doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  return doc;
}

inline nlohmann::ordered_json report_json(const RunReport& rep) {
  nlohmann::ordered_json doc;
  doc["model"] = rep.model;
  doc["seed"] = rep.seed;
  doc["bound"] = rep.bound;
  doc["ok"] = rep.ok();
  doc["scenarios"] = nlohmann::ordered_json::array();
  for (const ScenarioReport& s : rep.scenarios) doc["scenarios"].push_back(scenario_json(s));
  return doc;
}

inline std::string scenario_text(const ScenarioReport& rep) {
  std::size_t width = 0;
  for (const CheckLine& c : rep.checks) width = std::max(width, c.name.size());
  std::string out = "scenario " + rep.scenario + ": " + (rep.ok() ? "PASS" : "FAIL") + "\n";
  for (const CheckLine& c : rep.checks) {
    out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + c.name;
    if (!c.details.empty()) out += std::string(width - c.name.size() + 2, ' ') + c.details;
    out += "\n";
  }
  return out;
}

inline std::string report_text(const RunReport& rep) {
  std::string out;
  out += "model: " + rep.model + "\n";
  out += "seed: " + std::to_string(rep.seed) + "\n";
  out += "bound: " + std::to_string(rep.bound) + "\n\n";
  std::size_t passed = 0;
  for (const ScenarioReport& s : rep.scenarios) {
    out += scenario_text(s) + "\n";
    if (s.ok()) ++passed;
  }
  out += "summary: " + std::to_string(passed) + "/" + std::to_string(rep.scenarios.size()) +
         " scenarios passed\n";
  return out;
}

}  // namespace weightcat
