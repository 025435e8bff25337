#include "kam/kam.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "kam/errors.hpp"
#include "kam/field_parser.hpp"
#include "kam/fields.hpp"
#include "kam/grid.hpp"
#include "kam/operators.hpp"
#include "kam/report.hpp"
#include "kam/runner.hpp"
#include "kam/scenario.hpp"
#include "kam/tensor_identities.hpp"

struct kam_field {
  kam::PolynomialVector a;
  kam::Polynomial v;
  kam::PhysicalConstants constants;
  kam::FieldConfig config() const { return kam::FieldConfig(a, v, constants); }
};
struct kam_grid {
  kam::Grid grid;
};
struct kam_wavefunction {
  kam::WaveFunction psi;
};
struct kam_operator {
  kam::LinearOperator op;
};
struct kam_scenario {
  kam::Scenario scenario;
};
struct kam_report {
  kam::RunReport report;
};

namespace {

thread_local std::string last_error;

kam_status status_of(kam::ErrorCode code) {
  switch (code) {
    case kam::ErrorCode::invalid_argument: return KAM_ERR_INVALID_ARGUMENT;
    case kam::ErrorCode::parse_error: return KAM_ERR_PARSE;
    case kam::ErrorCode::precondition: return KAM_ERR_PRECONDITION;
    case kam::ErrorCode::not_converged: return KAM_ERR_NOT_CONVERGED;
    case kam::ErrorCode::unknown_key: return KAM_ERR_UNKNOWN_KEY;
    case kam::ErrorCode::duplicate_key: return KAM_ERR_DUPLICATE_KEY;
    case kam::ErrorCode::grid_mismatch: return KAM_ERR_GRID_MISMATCH;
    case kam::ErrorCode::not_normalized: return KAM_ERR_NOT_NORMALIZED;
    case kam::ErrorCode::unknown_scenario: return KAM_ERR_UNKNOWN_SCENARIO;
    case kam::ErrorCode::internal: return KAM_ERR_INTERNAL;
  }
  return KAM_ERR_INTERNAL;
}

kam_status fail(kam_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions to status codes and kam_last_error().
template <class F>
kam_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return KAM_OK;
  } catch (const kam::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return fail(KAM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(KAM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KAM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KAM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw kam::Error(kam::ErrorCode::invalid_argument, message);
}

kam::Rational positive_rational(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw kam::Error(kam::ErrorCode::invalid_argument, std::string(name) + " must be positive");
  }
  return kam::Rational(v);
}

}  // namespace

extern "C" {

const char* kam_version(void) { return "1.0.0"; }

const char* kam_last_error(void) { return last_error.c_str(); }

const char* kam_status_name(kam_status status) {
  if (status == KAM_OK) return "ok";
  if (status < KAM_ERR_INVALID_ARGUMENT || status > KAM_ERR_INTERNAL) return "unknown";
  return kam::to_string(static_cast<kam::ErrorCode>(status));
}

void kam_string_free(char* s) { std::free(s); }

kam_status kam_field_parse(const char* params, const char* a_expr, const char* v_expr,
                           kam_field** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    kam::ParameterTable table;
    if (params) {
      std::string_view rest(params);
      std::size_t column = 1;
      while (!rest.empty()) {
        const auto semi = rest.find(';');
        const std::string_view entry = rest.substr(0, semi);
        const auto eq = entry.find('=');
        if (eq == std::string_view::npos) {
          if (entry.find_first_not_of(" \t") != std::string_view::npos) {
            throw kam::ParseError(1, column, "parameter entry lacks '='");
          }
        } else {
          std::string name(entry.substr(0, eq));
          name.erase(0, name.find_first_not_of(" \t"));
          name.erase(name.find_last_not_of(" \t") + 1);
          if (name.empty()) throw kam::ParseError(1, column, "parameter name is empty");
          table[name] = kam::parse_constant_expression(entry.substr(eq + 1), table,
                                                       {1, column + eq + 1});
        }
        if (semi == std::string_view::npos) break;
        column += semi + 1;
        rest.remove_prefix(semi + 1);
      }
    }
    auto field = std::make_unique<kam_field>();
    if (a_expr) field->a = kam::parse_vector_expression(a_expr, table);
    if (v_expr) field->v = kam::parse_scalar_expression(v_expr, table);
    *out = field.release();
  });
}

kam_status kam_field_set_constants(kam_field* field, double q, double hbar, double m, double c) {
  return guarded([&] {
    require(field != nullptr, "field handle is NULL");
    kam::PhysicalConstants k;
    k.charge = positive_rational(q, "q");
    k.hbar = positive_rational(hbar, "hbar");
    k.mass = positive_rational(m, "m");
    k.light_speed = positive_rational(c, "c");
    field->constants = k;
  });
}

kam_status kam_field_hmag(const kam_field* field, char** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "NULL argument");
    *out = copy_string(field->config().hmag().to_string());
  });
}

void kam_field_free(kam_field* field) { delete field; }

kam_status kam_grid_create(int ndim, const int* dims, double h, const double* center,
                           kam_grid** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(ndim >= 1 && ndim <= 3, "ndim must be 1, 2 or 3");
    require(dims != nullptr, "dims is NULL");
    std::array<double, 3> c{0, 0, 0};
    if (center) c = {center[0], center[1], center[2]};
    *out = new kam_grid{kam::Grid::centered(std::vector<int>(dims, dims + ndim), h, c)};
  });
}

size_t kam_grid_point_count(const kam_grid* grid) { return grid ? grid->grid.point_count() : 0; }

void kam_grid_free(kam_grid* grid) { delete grid; }

kam_status kam_packet_create(const kam_grid* grid, const double* center, double sigma,
                             const double* k, int vortex, kam_wavefunction** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(grid != nullptr, "grid handle is NULL");
    kam::PacketSpec spec;
    if (center) spec.center = {center[0], center[1], center[2]};
    if (k) spec.wavevector = {k[0], k[1], k[2]};
    spec.sigma = sigma;
    spec.vortex = vortex;
    *out = new kam_wavefunction{kam::gaussian_packet(grid->grid, spec)};
  });
}

kam_status kam_wavefunction_norm(const kam_wavefunction* psi, double* out) {
  return guarded([&] {
    require(psi != nullptr && out != nullptr, "NULL argument");
    *out = psi->psi.norm();
  });
}

kam_status kam_wavefunction_amplitudes(const kam_wavefunction* psi, double* out, size_t count) {
  return guarded([&] {
    require(psi != nullptr && out != nullptr, "NULL argument");
    const auto& a = psi->psi.amplitudes();
    require(count >= 2 * static_cast<size_t>(a.size()), "output buffer too small");
    for (Eigen::Index n = 0; n < a.size(); ++n) {
      out[2 * n] = a[n].real();
      out[2 * n + 1] = a[n].imag();
    }
  });
}

void kam_wavefunction_free(kam_wavefunction* psi) { delete psi; }

kam_status kam_operator_build(const kam_grid* grid, const kam_field* field, const char* label,
                              kam_operator** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(grid != nullptr && label != nullptr, "NULL argument");
    const kam::FieldConfig config = field ? field->config() : kam::make_zero_field();
    *out = new kam_operator{kam::build_named(grid->grid, config, label)};
  });
}

kam_status kam_operator_apply(const kam_operator* op, const kam_wavefunction* psi,
                              kam_wavefunction** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(op != nullptr && psi != nullptr, "NULL argument");
    if (!(op->op.grid() == psi->psi.grid())) {
      throw kam::Error(kam::ErrorCode::grid_mismatch, "operator and state live on different grids");
    }
    *out = new kam_wavefunction{op->op.apply(psi->psi)};
  });
}

kam_status kam_operator_expectation(const kam_operator* op, const kam_wavefunction* psi,
                                    double* re, double* im) {
  return guarded([&] {
    require(op != nullptr && psi != nullptr, "NULL argument");
    if (!(op->op.grid() == psi->psi.grid())) {
      throw kam::Error(kam::ErrorCode::grid_mismatch, "operator and state live on different grids");
    }
    const kam::Complex v = kam::expectation(op->op, psi->psi);
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

void kam_operator_free(kam_operator* op) { delete op; }

kam_status kam_verify_tensors(uint64_t seed, int* passed, char** json_out) {
  return guarded([&] {
    const kam::Scenario s = kam::parse_scenario(kam::builtin_scenario("tensor-identities").text);
    kam::RunOptions options;
    options.seed = seed;
    const kam::RunReport r = kam::run_scenario(s, options);
    if (passed) *passed = r.passed ? 1 : 0;
    if (json_out) *json_out = copy_string(kam::emit_report(r, kam::ReportFormat::json));
  });
}

kam_status kam_scenario_parse(const char* text, kam_scenario** out, size_t* line, size_t* column) {
  if (line) *line = 0;
  if (column) *column = 0;
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(text != nullptr, "scenario text is NULL");
    try {
      *out = new kam_scenario{kam::parse_scenario(text)};
    } catch (const kam::ParseError& e) {
      if (line) *line = e.line();
      if (column) *column = e.column();
      throw;
    }
  });
}

kam_status kam_scenario_builtin(const char* name, kam_scenario** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(name != nullptr, "scenario name is NULL");
    *out = new kam_scenario{kam::parse_scenario(kam::builtin_scenario(name).text)};
  });
}

size_t kam_builtin_count(void) { return kam::builtin_scenarios().size(); }

const char* kam_builtin_name(size_t index) {
  const auto& all = kam::builtin_scenarios();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

const char* kam_builtin_summary(size_t index) {
  const auto& all = kam::builtin_scenarios();
  return index < all.size() ? all[index].summary.c_str() : nullptr;
}

const char* kam_builtin_text(size_t index) {
  const auto& all = kam::builtin_scenarios();
  return index < all.size() ? all[index].text.c_str() : nullptr;
}

const char* kam_scenario_name(const kam_scenario* scenario) {
  return scenario ? scenario->scenario.name.c_str() : nullptr;
}

void kam_scenario_free(kam_scenario* scenario) { delete scenario; }

kam_status kam_run(const kam_scenario* scenario, const kam_run_options* options,
                   kam_report** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(scenario != nullptr, "scenario handle is NULL");
    kam::RunOptions run;
    if (options) {
      if (options->override_seed) run.seed = options->seed;
      if (options->tolerance_scale != 0.0) run.tolerance_scale = options->tolerance_scale;
    }
    *out = new kam_report{kam::run_scenario(scenario->scenario, run)};
  });
}

kam_status kam_report_emit(const kam_report* report, kam_format format, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "NULL argument");
    require(format == KAM_FORMAT_JSON || format == KAM_FORMAT_CSV, "unknown report format");
    *out = copy_string(kam::emit_report(
        report->report, format == KAM_FORMAT_JSON ? kam::ReportFormat::json : kam::ReportFormat::csv));
  });
}

kam_status kam_report_parse(const char* json, kam_report** out) {
  return guarded([&] {
    require(out != nullptr, "output handle pointer is NULL");
    *out = nullptr;
    require(json != nullptr, "report text is NULL");
    *out = new kam_report{kam::parse_report(json)};
  });
}

int kam_report_passed(const kam_report* report) { return report && report->report.passed ? 1 : 0; }

size_t kam_report_check_count(const kam_report* report) {
  return report ? report->report.checks.size() : 0;
}

const char* kam_report_check_name(const kam_report* report, size_t index) {
  if (!report || index >= report->report.checks.size()) return nullptr;
  return report->report.checks[index].name.c_str();
}

int kam_report_check_passed(const kam_report* report, size_t index) {
  if (!report || index >= report->report.checks.size()) return 0;
  return report->report.checks[index].passed ? 1 : 0;
}

kam_status kam_report_trace_csv(const kam_report* report, size_t index, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "NULL argument");
    require(index < report->report.checks.size(), "check index out of range");
    const auto& check = report->report.checks[index];
    if (!check.trace) {
      throw kam::Error(kam::ErrorCode::invalid_argument,
                       "check '" + check.name + "' has no propagation trace");
    }
    *out = copy_string(kam::trace_csv(*check.trace));
  });
}

void kam_report_free(kam_report* report) { delete report; }

}  // extern "C"
