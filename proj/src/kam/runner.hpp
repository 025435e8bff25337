#pragma once

// Executes the checks named in a scenario and collects one result per check.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kam/dynamics.hpp"
#include "kam/scenario.hpp"

namespace kam {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;  // as listed in the suite
  std::string kind;  // tensor, residual, convergence, dynamic, gauge, ground-state, propagator
  bool passed = false;
  double residual = 0.0;  // worst residual of the check (failure count for tensor checks)
  std::optional<double> tolerance;  // absent for convergence fits
  std::optional<double> order;      // fitted order of convergence checks
  std::string error;                // message when the check could not run
  Json details = Json::object();
  std::optional<PropagationTrace> trace;

  friend bool operator==(const CheckResult&, const CheckResult&);
};

struct RunReport {
  std::string scenario_name;
  Json scenario = Json::object();  // echo of the parsed scenario
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  std::vector<CheckResult> checks;
  bool passed = false;  // every check passed
  double wall_time_seconds = 0.0;

  friend bool operator==(const RunReport&, const RunReport&);
};

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the scenario seed
  double tolerance_scale = 1.0;       // multiplies every tolerance except the order window
};

// Finite doubles as JSON numbers; NaN and infinities as the strings "nan",
// "inf", "-inf" so that every report stays valid JSON.
Json json_number(double value);
double json_to_number(const Json& value);

RunReport run_scenario(const Scenario& scenario, const RunOptions& options = {});

Json scenario_to_json(const Scenario& scenario);

// Scenarios shipped with the library.
struct BuiltinScenario {
  std::string name;
  std::string summary;
  std::string text;
};
const std::vector<BuiltinScenario>& builtin_scenarios();
// Throws Error(unknown_scenario).
const BuiltinScenario& builtin_scenario(std::string_view name);

}  // namespace kam
