#pragma once

// Report encodings: one JSON object per run, one CSV row per check, and the
// time-series CSV of a propagation trace.

#include <string>
#include <string_view>

#include "kam/runner.hpp"

namespace kam {

enum class ReportFormat { json, csv };

Json report_to_json(const RunReport& report);
RunReport report_from_json(const Json& j);

// Keys keep their insertion order; doubles print with round-trip precision.
std::string emit_report(const RunReport& report, ReportFormat format);
// Inverse of emit_report(report, ReportFormat::json).
RunReport parse_report(std::string_view json_text);

// Columns: time, re_<label>, im_<label> for each observable, norm_drift.
std::string trace_csv(const PropagationTrace& trace);

}  // namespace kam
