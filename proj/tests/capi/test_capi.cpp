#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "kam/kam.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  kam_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(kam_version(), "1.0.0");
  EXPECT_STREQ(kam_status_name(KAM_OK), "ok");
  EXPECT_STREQ(kam_status_name(KAM_ERR_PRECONDITION), "precondition");
  EXPECT_STREQ(kam_status_name(static_cast<kam_status>(99)), "unknown");
}

TEST(CApi, FieldParsingAndMagneticField) {
  kam_field* field = nullptr;
  ASSERT_EQ(kam_field_parse("B = 2; k = B/4", "(-k*y, k*x, 0)", nullptr, &field), KAM_OK);
  char* text = nullptr;
  ASSERT_EQ(kam_field_hmag(field, &text), KAM_OK);
  EXPECT_EQ(take(text), "(0, 0, 1)");
  EXPECT_EQ(kam_field_set_constants(field, 1, 1, 0, 1), KAM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kam_field_set_constants(field, -1, 1, 1, 1), KAM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kam_field_set_constants(field, 2, 1, 2, 137), KAM_OK);
  kam_field_free(field);

  field = nullptr;
  EXPECT_EQ(kam_field_parse(nullptr, "(x, y", nullptr, &field), KAM_ERR_PARSE);
  EXPECT_EQ(field, nullptr);
  EXPECT_NE(std::string(kam_last_error()).find("column"), std::string::npos);
}

TEST(CApi, PacketsAndOperators) {
  const int dims[3] = {24, 24, 24};
  kam_grid* grid = nullptr;
  ASSERT_EQ(kam_grid_create(3, dims, 0.25, nullptr, &grid), KAM_OK);
  EXPECT_EQ(kam_grid_point_count(grid), 24u * 24u * 24u);

  const double center[3] = {0, 0, 0}, k[3] = {0.5, 0, 0};
  kam_wavefunction* psi = nullptr;
  ASSERT_EQ(kam_packet_create(grid, center, 0.75, k, 0, &psi), KAM_OK);
  double norm = 0;
  ASSERT_EQ(kam_wavefunction_norm(psi, &norm), KAM_OK);
  EXPECT_NEAR(norm, 1.0, 1e-12);

  std::vector<double> amplitudes(2 * kam_grid_point_count(grid));
  EXPECT_EQ(kam_wavefunction_amplitudes(psi, amplitudes.data(), 3), KAM_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(kam_wavefunction_amplitudes(psi, amplitudes.data(), amplitudes.size()), KAM_OK);
  double sum = 0;
  for (std::size_t i = 0; i < amplitudes.size(); i += 2) {
    sum += amplitudes[i] * amplitudes[i] + amplitudes[i + 1] * amplitudes[i + 1];
  }
  EXPECT_NEAR(sum * 0.25 * 0.25 * 0.25, 1.0, 1e-12);

  kam_operator* x = nullptr;
  ASSERT_EQ(kam_operator_build(grid, nullptr, "x1", &x), KAM_OK);
  double re = 1, im = 1;
  ASSERT_EQ(kam_operator_expectation(x, psi, &re, &im), KAM_OK);
  EXPECT_NEAR(re, 0.0, 1e-12);
  EXPECT_NEAR(im, 0.0, 1e-12);

  kam_operator* p = nullptr;
  ASSERT_EQ(kam_operator_build(grid, nullptr, "p1", &p), KAM_OK);
  ASSERT_EQ(kam_operator_expectation(p, psi, &re, &im), KAM_OK);
  // Central differences see sin(p h) / h; averaging over the packet's
  // momentum spread 1 / (2 sigma) damps it by exp(-h^2 / (8 sigma^2)). The
  // tolerance covers the tails cut off at 4 sigma.
  EXPECT_NEAR(re, std::sin(0.5 * 0.25) / 0.25 * std::exp(-0.0625 / (8 * 0.5625)), 1e-4);

  kam_wavefunction* xpsi = nullptr;
  ASSERT_EQ(kam_operator_apply(x, psi, &xpsi), KAM_OK);
  kam_wavefunction_free(xpsi);

  kam_operator* bad = nullptr;
  EXPECT_EQ(kam_operator_build(grid, nullptr, "q7", &bad), KAM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);

  kam_operator_free(p);
  kam_operator_free(x);
  kam_wavefunction_free(psi);

  EXPECT_EQ(kam_packet_create(grid, center, 3.0, k, 0, &psi), KAM_ERR_PRECONDITION);
  kam_grid_free(grid);
  EXPECT_EQ(kam_grid_create(4, dims, 0.25, nullptr, &grid), KAM_ERR_INVALID_ARGUMENT);
}

TEST(CApi, NullArgumentsAreRejected) {
  EXPECT_EQ(kam_field_parse(nullptr, nullptr, nullptr, nullptr), KAM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kam_run(nullptr, nullptr, nullptr), KAM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kam_report_passed(nullptr), 0);
  kam_field_free(nullptr);
  kam_report_free(nullptr);
}

TEST(CApi, TensorSuite) {
  int passed = 0;
  char* json = nullptr;
  ASSERT_EQ(kam_verify_tensors(1, &passed, &json), KAM_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(json).find("verify-tensors"), std::string::npos);
}

TEST(CApi, ScenarioParseErrorsReportPosition) {
  kam_scenario* s = nullptr;
  std::size_t line = 0, column = 0;
  EXPECT_EQ(kam_scenario_parse("[checks]\nsuite = ll\nsuite = LL\n", &s, &line, &column),
            KAM_ERR_DUPLICATE_KEY);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(kam_scenario_parse("[grid]\nwidth = 3\n", &s, &line, nullptr), KAM_ERR_UNKNOWN_KEY);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(kam_scenario_builtin("missing", &s), KAM_ERR_UNKNOWN_SCENARIO);
}

TEST(CApi, BuiltinsAreListed) {
  ASSERT_GT(kam_builtin_count(), 0u);
  for (std::size_t i = 0; i < kam_builtin_count(); ++i) {
    kam_scenario* s = nullptr;
    ASSERT_EQ(kam_scenario_builtin(kam_builtin_name(i), &s), KAM_OK);
    EXPECT_STREQ(kam_scenario_name(s), kam_builtin_name(i));
    EXPECT_GT(std::string(kam_builtin_summary(i)).size(), 0u);
    kam_scenario_free(s);
  }
  EXPECT_EQ(kam_builtin_name(kam_builtin_count()), nullptr);
}

TEST(CApi, RunEmitParseRoundTrip) {
  const char* text =
      "name = capi\n[grid]\ndims = 400\nh = 1/20\n[state]\nsigma = 1\n"
      "[checks]\nsuite = verify-tensors, propagator\ndt = 1/100\nsteps = 20\n";
  kam_scenario* s = nullptr;
  ASSERT_EQ(kam_scenario_parse(text, &s, nullptr, nullptr), KAM_OK);
  kam_run_options options{1, 5, 0.0};
  kam_report* report = nullptr;
  ASSERT_EQ(kam_run(s, &options, &report), KAM_OK);
  EXPECT_EQ(kam_report_passed(report), 1);
  ASSERT_EQ(kam_report_check_count(report), 2u);
  EXPECT_STREQ(kam_report_check_name(report, 1), "propagator");
  EXPECT_EQ(kam_report_check_passed(report, 1), 1);

  char* trace = nullptr;
  EXPECT_EQ(kam_report_trace_csv(report, 0, &trace), KAM_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(kam_report_trace_csv(report, 1, &trace), KAM_OK);
  EXPECT_EQ(take(trace).rfind("time,", 0), 0u);

  char* json = nullptr;
  ASSERT_EQ(kam_report_emit(report, KAM_FORMAT_JSON, &json), KAM_OK);
  const std::string first = take(json);
  kam_report* parsed = nullptr;
  ASSERT_EQ(kam_report_parse(first.c_str(), &parsed), KAM_OK);
  ASSERT_EQ(kam_report_emit(parsed, KAM_FORMAT_JSON, &json), KAM_OK);
  EXPECT_EQ(take(json), first);

  char* csv = nullptr;
  ASSERT_EQ(kam_report_emit(report, KAM_FORMAT_CSV, &csv), KAM_OK);
  EXPECT_EQ(take(csv).rfind("name,residual,tolerance,order,pass\n", 0), 0u);

  EXPECT_EQ(kam_report_parse("{", &parsed), KAM_ERR_PARSE);
  kam_report_free(parsed);
  kam_report_free(report);
  kam_scenario_free(s);
}
