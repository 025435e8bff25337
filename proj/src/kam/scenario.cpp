#include "kam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kam/errors.hpp"

namespace kam {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Column (1-based) of `part` inside `line`; both views share storage.
std::size_t column_of(std::string_view line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Entry {
  std::string_view line;
  std::size_t line_no;
  std::string_view key;
  std::string_view value;

  SourcePosition value_position() const { return {line_no, column_of(line, value)}; }
  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    throw ParseError(code, line_no, column_of(line, value.empty() ? key : value), message);
  }
};

class Reader {
 public:
  explicit Reader(Scenario& out) : out_(out) {}

  void entry(const std::string& section, const Entry& e) {
    if (section.empty()) return preamble(e);
    if (section == "field") return field(e);
    if (section == "grid") return grid(e);
    if (section == "state") return state(e);
    return checks(e);
  }

 private:
  Rational constant(const Entry& e) const {
    return parse_constant_expression(e.value, out_.field.parameters, e.value_position());
  }
  double real(const Entry& e) const { return to_double(constant(e)); }

  long long integer(const Entry& e) const {
    const Rational r = constant(e);
    if (denominator(r) != 1) e.fail(ErrorCode::parse_error, "'" + std::string(e.key) + "' must be an integer");
    return static_cast<long long>(numerator(r));
  }

  double positive(const Entry& e) const {
    const double v = real(e);
    if (!(v > 0.0)) e.fail(ErrorCode::precondition, "'" + std::string(e.key) + "' must be positive");
    return v;
  }

  std::array<double, 3> triple(const Entry& e) const {
    const std::string_view v = e.value;
    if (v.size() < 2 || v.front() != '(' || v.back() != ')') {
      e.fail(ErrorCode::parse_error, "expected a triple '(a, b, c)'");
    }
    const auto parts = split_list(v.substr(1, v.size() - 2));
    if (parts.size() != 3) e.fail(ErrorCode::parse_error, "expected exactly three components");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
      out[i] = to_double(parse_constant_expression(
          parts[i], out_.field.parameters, {e.line_no, column_of(e.line, parts[i])}));
    }
    return out;
  }

  bool boolean(const Entry& e) const {
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    e.fail(ErrorCode::parse_error, "expected 'true' or 'false'");
  }

  [[noreturn]] static void unknown(const Entry& e, const std::string& section) {
    throw ParseError(ErrorCode::unknown_key, e.line_no, column_of(e.line, e.key),
                     "unknown key '" + std::string(e.key) + "' in " + section);
  }

  void preamble(const Entry& e) {
    if (e.key == "name") {
      out_.name = std::string(e.value);
      if (out_.name.empty()) e.fail(ErrorCode::parse_error, "name must not be empty");
    } else if (e.key == "description") {
      out_.description = std::string(e.value);
    } else {
      unknown(e, "the preamble");
    }
  }

  void field(const Entry& e) {
    ScenarioField& f = out_.field;
    if (e.key.substr(0, 6) == "param ") {
      const std::string name(trim(e.key.substr(6)));
      const bool identifier =
          !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
          std::all_of(name.begin(), name.end(),
                      [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
      if (!identifier) e.fail(ErrorCode::parse_error, "parameter name '" + name + "' is not an identifier");
      if (name == "x" || name == "y" || name == "z") {
        e.fail(ErrorCode::parse_error, "parameter name '" + name + "' shadows a coordinate");
      }
      f.parameters[name] = constant(e);
      f.parameter_order.push_back(name);
    } else if (e.key == "A") {
      f.a = parse_vector_expression(e.value, f.parameters, e.value_position());
      f.a_text = std::string(e.value);
    } else if (e.key == "V") {
      f.v = parse_scalar_expression(e.value, f.parameters, e.value_position());
      f.v_text = std::string(e.value);
    } else if (e.key == "chi") {
      f.chi = parse_scalar_expression(e.value, f.parameters, e.value_position());
      f.chi_text = std::string(e.value);
    } else if (e.key == "q" || e.key == "hbar" || e.key == "m" || e.key == "c") {
      const Rational v = constant(e);
      if (v <= 0) e.fail(ErrorCode::precondition, "'" + std::string(e.key) + "' must be positive");
      (e.key == "q" ? f.constants.charge
       : e.key == "hbar" ? f.constants.hbar
       : e.key == "m" ? f.constants.mass
                      : f.constants.light_speed) = v;
    } else {
      unknown(e, "[field]");
    }
  }

  void grid(const Entry& e) {
    ScenarioGrid& g = out_.grid;
    if (e.key == "dims") {
      const auto parts = split_list(e.value);
      if (parts.empty() || parts.size() > 3) e.fail(ErrorCode::parse_error, "dims takes 1 to 3 sizes");
      g.dims.clear();
      for (const auto part : parts) {
        const Entry sub{e.line, e.line_no, e.key, part};
        const long long n = integer(sub);
        if (n < 8) sub.fail(ErrorCode::precondition, "each grid size must be at least 8");
        if (n > 4096) sub.fail(ErrorCode::precondition, "grid size above 4096");
        g.dims.push_back(static_cast<int>(n));
      }
    } else if (e.key == "h") {
      g.h = positive(e);
    } else if (e.key == "origin") {
      g.origin = triple(e);
    } else if (e.key == "center") {
      g.center = triple(e);
    } else {
      unknown(e, "[grid]");
    }
  }

  void state(const Entry& e) {
    ScenarioState& s = out_.state;
    if (e.key == "center") {
      s.packet.center = triple(e);
    } else if (e.key == "sigma") {
      s.packet.sigma = positive(e);
    } else if (e.key == "k") {
      s.packet.wavevector = triple(e);
    } else if (e.key == "vortex") {
      const long long m = integer(e);
      if (std::llabs(m) > 8) e.fail(ErrorCode::precondition, "vortex winding above 8");
      s.packet.vortex = static_cast<int>(m);
    } else if (e.key == "variants") {
      s.variants = boolean(e);
    } else {
      unknown(e, "[state]");
    }
  }

  void checks(const Entry& e) {
    ScenarioChecks& c = out_.checks;
    if (e.key == "suite") {
      c.suite.clear();
      if (e.value.empty()) return;
      for (const auto name : split_list(e.value)) {
        if (name.empty()) e.fail(ErrorCode::parse_error, "empty check name in suite");
        if (!is_known_check(name)) {
          throw ParseError(ErrorCode::unknown_key, e.line_no, column_of(e.line, name),
                           "unknown check '" + std::string(name) + "'");
        }
        c.suite.emplace_back(name);
      }
    } else if (e.key.substr(0, 10) == "tolerance.") {
      const std::string which(e.key.substr(10));
      if (!default_tolerances().count(which)) {
        throw ParseError(ErrorCode::unknown_key, e.line_no, column_of(e.line, e.key),
                         "unknown tolerance '" + which + "'");
      }
      c.tolerances[which] = positive(e);
    } else if (e.key == "levels") {
      const long long n = integer(e);
      if (n < 3 || n > 6) e.fail(ErrorCode::precondition, "levels must be between 3 and 6");
      c.levels = static_cast<int>(n);
    } else if (e.key == "base_level") {
      const long long n = integer(e);
      if (n < -3 || n > 3) e.fail(ErrorCode::precondition, "base_level must be between -3 and 3");
      c.base_level = static_cast<int>(n);
    } else if (e.key == "refine") {
      c.refine = positive(e);
      if (!(c.refine > 1.0)) e.fail(ErrorCode::precondition, "refine must exceed 1");
    } else if (e.key == "dt") {
      c.dt = positive(e);
    } else if (e.key == "steps") {
      const long long n = integer(e);
      if (n < 2 || n > 1000000) e.fail(ErrorCode::precondition, "steps must be between 2 and 1000000");
      c.steps = static_cast<int>(n);
    } else if (e.key == "seed") {
      const long long n = integer(e);
      if (n < 0) e.fail(ErrorCode::precondition, "seed must be non-negative");
      c.seed = static_cast<std::uint64_t>(n);
    } else {
      unknown(e, "[checks]");
    }
  }

  Scenario& out_;
};

bool uses_state(const std::string& check) { return check != "verify-tensors" && check != "landau"; }

// Checks whose identities mix all three axes.
bool needs_three_dimensions(const std::string& check) {
  return check != "verify-tensors" && check != "landau" && check != "propagator" &&
         check != "central-torque" && check != "ehrenfest-dynamic";
}

}  // namespace

Grid ScenarioGrid::build() const {
  return origin ? Grid(dims, h, *origin) : Grid::centered(dims, h, center);
}

Grid ScenarioGrid::refined(int level, double ratio) const {
  if (level == 0) return build();
  std::vector<int> fine;
  double h_level = h;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    const long cells = std::lround((dims[a] + 1) * std::pow(ratio, level));
    fine.push_back(static_cast<int>(cells) - 1);
    if (a == 0) h_level = h * (dims[0] + 1) / static_cast<double>(cells);
  }
  if (origin) {
    std::array<double, 3> o = *origin;
    for (std::size_t a = 0; a < dims.size(); ++a) o[a] = (*origin)[a] - h + h_level;
    return Grid(fine, h_level, o);
  }
  return Grid::centered(fine, h_level, center);
}

double Scenario::tolerance(const std::string& key) const {
  const auto it = checks.tolerances.find(key);
  if (it != checks.tolerances.end()) return it->second;
  return default_tolerances().at(key);
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table = {
      {"ll", 1e-2},
      {"LL", 1e-2},
      {"pipi", 1e-2},
      {"force-forms", 1e-2},
      {"ehrenfest-static", 1e-2},
      {"central-torque", 1e-10},
      {"ehrenfest-dynamic", 1e-2},
      {"norm-step", 1e-10},
      {"energy-drift", 1e-8},
      {"gauge", 1e-2},
      {"gauge-shift", 5e-2},
      {"landau", 2e-2},
      {"landau-dense", 1e-6},
      {"propagator", 1e-2},
      {"propagator-reversal", 1e-8},
      {"exact", 1e-12},
      {"order-min", 1.7},
      {"order-max", 2.3},
  };
  return table;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "verify-tensors", "ll",    "LL",         "pipi",   "force-forms", "ehrenfest-static",
      "central-torque", "ehrenfest-dynamic", "gauge", "converge", "landau", "propagator"};
  return names;
}

const std::vector<std::string>& convergence_targets() {
  static const std::vector<std::string> names = {"ll",          "LL",
                                                 "pipi",        "force-forms",
                                                 "ehrenfest-static", "gauge"};
  return names;
}

bool is_known_check(std::string_view name) {
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    if (name.substr(0, colon) != "converge") return false;
    const auto target = name.substr(colon + 1);
    const auto& t = convergence_targets();
    return std::find(t.begin(), t.end(), target) != t.end();
  }
  if (name == "converge") return false;
  const auto& k = known_checks();
  return std::find(k.begin(), k.end(), name) != k.end();
}

Scenario parse_scenario(std::string_view text) {
  Scenario out;
  Reader reader(out);
  std::string section;
  std::set<std::string> seen_sections;
  std::map<std::string, std::size_t> seen_keys;  // "section/key" -> line
  std::size_t suite_line = 0;
  std::size_t state_line = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view raw =
        text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;

    if (body.front() == '[') {
      if (body.back() != ']') {
        throw ParseError(line_no, column_of(raw, body), "section header lacks ']'");
      }
      const std::string name(trim(body.substr(1, body.size() - 2)));
      if (name != "field" && name != "grid" && name != "state" && name != "checks") {
        throw ParseError(ErrorCode::unknown_key, line_no, column_of(raw, body),
                         "unknown section [" + name + "]");
      }
      if (!seen_sections.insert(name).second) {
        throw ParseError(ErrorCode::duplicate_key, line_no, column_of(raw, body),
                         "section [" + name + "] appears twice");
      }
      if (name == "state") state_line = line_no;
      section = name;
      continue;
    }

    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, column_of(raw, body), "expected 'key = value'");
    }
    const std::string_view key = trim(body.substr(0, eq));
    std::string_view value = trim(body.substr(eq + 1));
    if (value.empty()) value = body.substr(body.size());
    if (key.empty()) throw ParseError(line_no, column_of(raw, body), "missing key before '='");

    std::string canonical(key);
    if (canonical.substr(0, 6) == "param ") canonical = "param " + std::string(trim(key.substr(6)));
    const std::string slot = section + "/" + canonical;
    if (const auto it = seen_keys.find(slot); it != seen_keys.end()) {
      throw ParseError(ErrorCode::duplicate_key, line_no, column_of(raw, key),
                       "duplicate key '" + canonical + "' (first on line " +
                           std::to_string(it->second) + ", again on line " +
                           std::to_string(line_no) + ")");
    }
    seen_keys.emplace(slot, line_no);
    if (section == "checks" && key == "suite") suite_line = line_no;
    reader.entry(section, Entry{raw, line_no, key, value});
  }

  if (out.checks.suite.empty()) {
    throw ParseError(ErrorCode::precondition, suite_line ? suite_line : line_no, 1,
                     "no checks requested");
  }
  try {
    validate_scenario(out);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.code(), state_line ? state_line : 1, 1, e.what());
  }
  return out;
}

void validate_scenario(const Scenario& scenario) {
  if (scenario.checks.suite.empty()) throw PreconditionError("no checks requested");
  for (const auto& check : scenario.checks.suite) {
    if (!is_known_check(check)) {
      throw Error(ErrorCode::unknown_key, "unknown check '" + check + "'");
    }
  }
  const Grid grid = scenario.grid.build();
  const bool needs_state = std::any_of(scenario.checks.suite.begin(), scenario.checks.suite.end(),
                                       [](const std::string& c) { return uses_state(c); });
  if (needs_state) {
    if (const std::string why = packet_precondition_violation(grid, scenario.state.packet);
        !why.empty()) {
      throw PreconditionError(why);
    }
  }
  for (const auto& check : scenario.checks.suite) {
    if (needs_three_dimensions(check) && grid.dimension() != 3) {
      throw PreconditionError("check '" + check + "' needs a 3D grid, the scenario grid is " +
                              grid.describe());
    }
  }
  const bool needs_chi = std::any_of(
      scenario.checks.suite.begin(), scenario.checks.suite.end(),
      [](const std::string& c) { return c == "gauge" || c == "converge:gauge"; });
  if (needs_chi && !scenario.field.chi) {
    throw PreconditionError("the gauge check needs a gauge function 'chi' in [field]");
  }
}

}  // namespace kam
