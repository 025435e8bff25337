#pragma once

// Scenario files: line-oriented `key = value` text in four sections.
//
//   name = uniform-b-commutators
//   [field]
//   param B = 1
//   A = (-B*y/2, B*x/2, 0)
//   V = 0
//   [grid]
//   dims = 48, 48, 48
//   h = 1/3
//   [state]
//   sigma = 2
//   [checks]
//   suite = LL, converge:LL
//
// '#' starts a comment. Numeric values are exact constant expressions and
// may use the [field] parameters declared above them.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kam/field_parser.hpp"
#include "kam/fields.hpp"
#include "kam/grid.hpp"
#include "kam/wavefunction.hpp"

namespace kam {

struct ScenarioField {
  ParameterTable parameters;
  std::vector<std::string> parameter_order;
  std::string a_text = "(0, 0, 0)";
  std::string v_text = "0";
  std::string chi_text;  // empty when no gauge function is given
  PolynomialVector a;
  Polynomial v;
  std::optional<Polynomial> chi;
  PhysicalConstants constants;

  FieldConfig config() const { return FieldConfig(a, v, constants); }
};

struct ScenarioGrid {
  std::vector<int> dims = {32, 32, 32};
  double h = 0.25;
  std::optional<std::array<double, 3>> origin;  // else centered on `center`
  std::array<double, 3> center{0, 0, 0};

  Grid build() const;
  // Same physical box at level l: N_l + 1 = round((N + 1) ratio^l).
  Grid refined(int level, double ratio) const;
};

struct ScenarioState {
  PacketSpec packet;
  bool variants = true;  // also run the displaced and vortex copies
};

struct ScenarioChecks {
  std::vector<std::string> suite;
  std::map<std::string, double> tolerances;  // overrides of default_tolerances()
  int levels = 3;
  int base_level = 0;  // first refinement level relative to [grid]
  double refine = 2.0;
  double dt = 0.0;  // 0: default_time_step
  int steps = 0;    // 0: check-specific default
  std::uint64_t seed = 20240611;
};

struct Scenario {
  std::string name = "unnamed";
  std::string description;
  ScenarioField field;
  ScenarioGrid grid;
  ScenarioState state;
  ScenarioChecks checks;

  double tolerance(const std::string& key) const;
};

// Default tolerance table keyed by the names accepted as `tolerance.<key>`.
const std::map<std::string, double>& default_tolerances();

// Check names accepted in `suite`; "converge:<target>" takes the targets
// listed by convergence_targets().
const std::vector<std::string>& known_checks();
const std::vector<std::string>& convergence_targets();
bool is_known_check(std::string_view name);

// Throws ParseError with code parse_error (syntax), unknown_key,
// duplicate_key, or precondition (grid, state or suite invariants).
Scenario parse_scenario(std::string_view text);

// Grid/state/suite invariants; throws Error(precondition) naming the problem.
void validate_scenario(const Scenario& scenario);

}  // namespace kam
