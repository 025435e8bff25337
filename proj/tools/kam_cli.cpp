// kam: run verification scenarios and emit JSON or CSV reports.
//
// Exit status: 0 when every check passes, 1 when any check fails, 2 on a
// usage, input or runtime error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kam/kam.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { kam_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;
struct ScenarioDeleter {
  void operator()(kam_scenario* s) const { kam_scenario_free(s); }
};
using ScenarioHandle = std::unique_ptr<kam_scenario, ScenarioDeleter>;
struct ReportDeleter {
  void operator()(kam_report* r) const { kam_report_free(r); }
};
using ReportHandle = std::unique_ptr<kam_report, ReportDeleter>;

struct Settings {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  double tolerance_scale = 1.0;
  std::string output;     // empty: stdout
  std::string trace_dir;  // empty: no trace files
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(kam_status status, const std::string& context) {
  if (status != KAM_OK) {
    throw CliError(context + ": " + kam_status_name(status) + ": " + kam_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open scenario file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const Settings& settings, const std::string& text) {
  if (settings.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(settings.output, std::ios::binary);
  if (!out) throw CliError("cannot write '" + settings.output + "'");
  out << text;
}

ReportHandle run(const kam_scenario* scenario, const Settings& settings) {
  kam_run_options options{};
  options.override_seed = settings.seed.has_value();
  options.seed = settings.seed.value_or(0);
  options.tolerance_scale = settings.tolerance_scale;
  kam_report* raw = nullptr;
  check(kam_run(scenario, &options, &raw), std::string("running ") + kam_scenario_name(scenario));
  return ReportHandle(raw);
}

std::string emit(const kam_report* report, kam_format format) {
  char* raw = nullptr;
  check(kam_report_emit(report, format, &raw), "emitting report");
  return OwnedString(raw).get();
}

void write_traces(const kam_report* report, const std::string& scenario, const Settings& settings) {
  if (settings.trace_dir.empty()) return;
  for (std::size_t i = 0; i < kam_report_check_count(report); ++i) {
    char* raw = nullptr;
    if (kam_report_trace_csv(report, i, &raw) != KAM_OK) continue;
    const OwnedString csv(raw);
    const std::string path =
        settings.trace_dir + "/" + scenario + "." + kam_report_check_name(report, i) + ".trace.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("cannot write trace '" + path + "'");
    out << csv.get();
  }
}

kam_format format_of(const Settings& settings) {
  return settings.format == "csv" ? KAM_FORMAT_CSV : KAM_FORMAT_JSON;
}

int run_one(ScenarioHandle scenario, const Settings& settings) {
  const ReportHandle report = run(scenario.get(), settings);
  write_traces(report.get(), kam_scenario_name(scenario.get()), settings);
  write_output(settings, emit(report.get(), format_of(settings)));
  return kam_report_passed(report.get()) ? kExitPass : kExitFail;
}

int run_file(const std::string& path, const Settings& settings) {
  const std::string text = read_file(path);
  kam_scenario* raw = nullptr;
  std::size_t line = 0, column = 0;
  const kam_status status = kam_scenario_parse(text.c_str(), &raw, &line, &column);
  if (status != KAM_OK) {
    throw CliError(path + ": " + kam_status_name(status) + ": " + kam_last_error());
  }
  return run_one(ScenarioHandle(raw), settings);
}

int run_builtin(const std::string& name, const Settings& settings) {
  kam_scenario* raw = nullptr;
  check(kam_scenario_builtin(name.c_str(), &raw), "loading scenario '" + name + "'");
  return run_one(ScenarioHandle(raw), settings);
}

int run_all(const Settings& settings) {
  bool passed = true;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  std::string csv = "scenario,name,residual,tolerance,order,pass\n";
  for (std::size_t i = 0; i < kam_builtin_count(); ++i) {
    const std::string name = kam_builtin_name(i);
    kam_scenario* raw = nullptr;
    check(kam_scenario_builtin(name.c_str(), &raw), "loading scenario '" + name + "'");
    const ScenarioHandle scenario(raw);
    const ReportHandle report = run(scenario.get(), settings);
    write_traces(report.get(), name, settings);
    passed = passed && kam_report_passed(report.get());
    std::cerr << (kam_report_passed(report.get()) ? "PASS " : "FAIL ") << name << '\n';
    if (format_of(settings) == KAM_FORMAT_JSON) {
      reports.push_back(nlohmann::ordered_json::parse(emit(report.get(), KAM_FORMAT_JSON)));
    } else {
      std::istringstream rows(emit(report.get(), KAM_FORMAT_CSV));
      std::string row;
      std::getline(rows, row);  // header
      while (std::getline(rows, row)) csv += name + "," + row + "\n";
    }
  }
  if (format_of(settings) == KAM_FORMAT_JSON) {
    nlohmann::ordered_json all;
    all["passed"] = passed;
    all["reports"] = reports;
    write_output(settings, all.dump(2) + "\n");
  } else {
    write_output(settings, csv);
  }
  return passed ? kExitPass : kExitFail;
}

int verify_tensors(const Settings& settings) {
  kam_scenario* raw = nullptr;
  check(kam_scenario_builtin("tensor-identities", &raw), "loading tensor suite");
  return run_one(ScenarioHandle(raw), settings);
}

void list_scenarios() {
  for (std::size_t i = 0; i < kam_builtin_count(); ++i) {
    std::printf("%-40s %s\n", kam_builtin_name(i), kam_builtin_summary(i));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid verification of angular-momentum operator identities with minimal coupling"};
  app.set_version_flag("--version", std::string(kam_version()));
  Settings settings;
  bool list = false;
  app.add_flag("--list-scenarios", list, "List built-in scenarios and exit");
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", settings.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", settings.seed, "Override the scenario seed");
    sub->add_option("--tolerance-scale", settings.tolerance_scale,
                    "Multiply every tolerance except the convergence-order window")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", settings.output, "Write the report to a file");
    sub->add_option("--trace-dir", settings.trace_dir,
                    "Write propagation traces as CSV files into this directory")
        ->check(CLI::ExistingDirectory);
  };
  // The global flags are also accepted before the subcommand.
  add_common(&app);

  CLI::App* tensors = app.add_subcommand("verify-tensors", "Run the exact tensor-identity suite");
  add_common(tensors);

  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario file or built-in scenario");
  std::string file;
  std::string builtin;
  auto* file_opt = run_cmd->add_option("scenario-file", file, "Scenario file")
                       ->check(CLI::ExistingFile);
  auto* builtin_opt = run_cmd->add_option("--builtin", builtin, "Built-in scenario name");
  file_opt->excludes(builtin_opt);
  add_common(run_cmd);

  CLI::App* all = app.add_subcommand("run-all", "Run every built-in scenario");
  add_common(all);

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list) {
      list_scenarios();
      return kExitPass;
    }
    if (*tensors) return verify_tensors(settings);
    if (*run_cmd) {
      if (file.empty() && builtin.empty()) {
        std::cerr << "run: give a scenario file or --builtin NAME\n";
        return kExitUsage;
      }
      return file.empty() ? run_builtin(builtin, settings) : run_file(file, settings);
    }
    if (*all) return run_all(settings);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "kam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "kam: " << e.what() << '\n';
    return kExitUsage;
  }
}
