#include "kam/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "kam/errors.hpp"

namespace kam {

namespace {

Json optional_number(const std::optional<double>& v) {
  return v ? json_number(*v) : Json(nullptr);
}

std::optional<double> number_or_null(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return json_to_number(j);
}

Json trace_to_json(const PropagationTrace& t) {
  Json j;
  Json times = Json::array();
  for (double v : t.times) times.push_back(json_number(v));
  j["times"] = times;
  j["labels"] = t.labels;
  Json obs = Json::object();
  for (const auto& label : t.labels) {
    Json series = Json::array();
    for (const Complex& z : t.at(label)) {
      series.push_back(Json::array({json_number(z.real()), json_number(z.imag())}));
    }
    obs[label] = series;
  }
  j["observables"] = obs;
  Json drift = Json::array();
  for (double v : t.norm_drift) drift.push_back(json_number(v));
  j["norm_drift"] = drift;
  return j;
}

PropagationTrace trace_from_json(const Json& j) {
  PropagationTrace t;
  for (const auto& v : j.at("times")) t.times.push_back(json_to_number(v));
  t.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& label : t.labels) {
    auto& series = t.observables[label];
    for (const auto& z : j.at("observables").at(label)) {
      series.emplace_back(json_to_number(z.at(0)), json_to_number(z.at(1)));
    }
  }
  for (const auto& v : j.at("norm_drift")) t.norm_drift.push_back(json_to_number(v));
  return t;
}

// Shortest text that parses back to the same double.
std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json report_to_json(const RunReport& r) {
  Json j;
  j["scenario_name"] = r.scenario_name;
  j["passed"] = r.passed;
  j["seed"] = r.seed;
  j["tolerance_scale"] = json_number(r.tolerance_scale);
  j["scenario"] = r.scenario;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["kind"] = c.kind;
    cj["passed"] = c.passed;
    cj["residual"] = json_number(c.residual);
    cj["tolerance"] = optional_number(c.tolerance);
    cj["order"] = optional_number(c.order);
    cj["error"] = c.error;
    cj["details"] = c.details;
    cj["trace"] = c.trace ? trace_to_json(*c.trace) : Json(nullptr);
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["wall_time_seconds"] = json_number(r.wall_time_seconds);
  return j;
}

RunReport report_from_json(const Json& j) {
  try {
    RunReport r;
    r.scenario_name = j.at("scenario_name").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tolerance_scale = json_to_number(j.at("tolerance_scale"));
    r.scenario = j.at("scenario");
    for (const auto& cj : j.at("checks")) {
      CheckResult c;
      c.name = cj.at("name").get<std::string>();
      c.kind = cj.at("kind").get<std::string>();
      c.passed = cj.at("passed").get<bool>();
      c.residual = json_to_number(cj.at("residual"));
      c.tolerance = number_or_null(cj.at("tolerance"));
      c.order = number_or_null(cj.at("order"));
      c.error = cj.at("error").get<std::string>();
      c.details = cj.at("details");
      if (!cj.at("trace").is_null()) c.trace = trace_from_json(cj.at("trace"));
      r.checks.push_back(std::move(c));
    }
    r.wall_time_seconds = json_to_number(j.at("wall_time_seconds"));
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed report: ") + e.what());
  }
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream os;
  os << "name,residual,tolerance,order,pass\n";
  for (const auto& c : report.checks) {
    os << csv_field(c.name) << ',' << csv_number(c.residual) << ','
       << (c.tolerance ? csv_number(*c.tolerance) : "") << ','
       << (c.order ? csv_number(*c.order) : "") << ',' << (c.passed ? "true" : "false") << '\n';
  }
  return os.str();
}

RunReport parse_report(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

std::string trace_csv(const PropagationTrace& trace) {
  std::ostringstream os;
  os << "time";
  for (const auto& label : trace.labels) os << ",re_" << label << ",im_" << label;
  os << ",norm_drift\n";
  for (std::size_t n = 0; n < trace.samples(); ++n) {
    os << csv_number(trace.times[n]);
    for (const auto& label : trace.labels) {
      const Complex z = trace.at(label)[n];
      os << ',' << csv_number(z.real()) << ',' << csv_number(z.imag());
    }
    os << ',' << csv_number(trace.norm_drift[n]) << '\n';
  }
  return os.str();
}

}  // namespace kam
