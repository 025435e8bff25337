#include <gtest/gtest.h>

#include <cmath>

#include "kam/errors.hpp"
#include "kam/runner.hpp"
#include "kam/scenario.hpp"

using kam::Rational;

namespace {

const char* kMinimal = R"(name = minimal
[field]
param B = 1/2
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 32, 32, 32
h = 1/4
[state]
sigma = 1
[checks]
suite = LL
)";

kam::ParseError parse_failure(const std::string& text) {
  try {
    kam::parse_scenario(text);
  } catch (const kam::ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return kam::ParseError(0, 0, "none");
}

}  // namespace

TEST(Scenario, DefaultsApplyWhenSectionsAreOmitted) {
  const auto s = kam::parse_scenario("[checks]\nsuite = verify-tensors\n");
  EXPECT_EQ(s.name, "unnamed");
  EXPECT_EQ(s.grid.dims, (std::vector<int>{32, 32, 32}));
  EXPECT_EQ(s.grid.h, 0.25);
  EXPECT_EQ(s.checks.levels, 3);
  EXPECT_EQ(s.checks.refine, 2.0);
  EXPECT_EQ(s.checks.seed, 20240611u);
  EXPECT_EQ(s.tolerance("ll"), kam::default_tolerances().at("ll"));
  EXPECT_TRUE(s.field.config().hmag()[2].is_zero());
}

TEST(Scenario, ParametersFeedPotentialsExactly) {
  const auto s = kam::parse_scenario(kMinimal);
  EXPECT_EQ(s.name, "minimal");
  EXPECT_EQ(s.field.parameters.at("B"), Rational(1, 2));
  const auto cfg = s.field.config();
  EXPECT_TRUE(cfg.has_uniform_hmag());
  EXPECT_EQ(cfg.hmag()[2].constant_term(), Rational(1, 2));
  EXPECT_EQ(s.grid.h, 0.25);
  EXPECT_EQ(s.state.packet.sigma, 1.0);
}

TEST(Scenario, ParameterMustBeDeclaredBeforeUse) {
  const auto e = parse_failure("[field]\nA = (-B*y, 0, 0)\nparam B = 1\n[checks]\nsuite = LL\n");
  EXPECT_EQ(e.line(), 2u);
}

TEST(Scenario, ToleranceOverridesAndUnknownTolerance) {
  const auto s = kam::parse_scenario(std::string(kMinimal) + "tolerance.LL = 3e-2\n");
  EXPECT_DOUBLE_EQ(s.tolerance("LL"), 3e-2);
  const auto e = parse_failure(std::string(kMinimal) + "tolerance.bogus = 1\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::unknown_key);
  EXPECT_EQ(e.line(), 12u);
}

TEST(Scenario, DuplicateKeyNamesBothLines) {
  auto e = parse_failure(std::string(kMinimal) + "suite = ll\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::duplicate_key);
  EXPECT_EQ(e.line(), 12u);
  EXPECT_NE(e.message().find("line 11"), std::string::npos) << e.message();
  EXPECT_NE(e.message().find("line 12"), std::string::npos) << e.message();
  e = parse_failure(std::string(kMinimal) + "[grid]\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::duplicate_key);
  EXPECT_EQ(e.line(), 12u);
}

TEST(Scenario, UnknownKeySectionAndCheckCarryTheirLine) {
  auto e = parse_failure("[grid]\nspacing = 1\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::unknown_key);
  EXPECT_EQ(e.line(), 2u);
  e = parse_failure("name = x\n[physics]\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::unknown_key);
  EXPECT_EQ(e.line(), 2u);
  e = parse_failure("[checks]\nsuite = ll, warp-drive\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::unknown_key);
  EXPECT_NE(e.message().find("warp-drive"), std::string::npos);
  e = parse_failure("[checks]\nsuite = converge:landau\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::unknown_key);
}

TEST(Scenario, SyntaxErrorsCarryLineAndColumn) {
  auto e = parse_failure("[field]\nA = (x, y +, 0)\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::parse_error);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_GT(e.column(), 4u);
  e = parse_failure("[grid]\nh\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::parse_error);
  EXPECT_EQ(e.line(), 2u);
  e = parse_failure("[grid\n");
  EXPECT_EQ(e.line(), 1u);
}

TEST(Scenario, EmptySuiteIsRejected) {
  const auto e = parse_failure("name = nothing\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::precondition);
  EXPECT_NE(e.message().find("no checks requested"), std::string::npos);
}

TEST(Scenario, InvariantViolationsArePreconditionErrors) {
  // sigma below 3h
  auto e = parse_failure(std::string(kMinimal) + "[state]\n");
  EXPECT_EQ(e.code(), kam::ErrorCode::duplicate_key);
  std::string text = kMinimal;
  text.replace(text.find("sigma = 1"), 9, "sigma = 1/2");
  e = parse_failure(text);
  EXPECT_EQ(e.code(), kam::ErrorCode::precondition);
  // identity checks need a 3D grid
  text = kMinimal;
  text.replace(text.find("dims = 32, 32, 32"), 17, "dims = 32, 32");
  e = parse_failure(text);
  EXPECT_EQ(e.code(), kam::ErrorCode::precondition);
  // the gauge check needs a gauge function
  text = kMinimal;
  text.replace(text.find("suite = LL"), 10, "suite = gauge");
  e = parse_failure(text);
  EXPECT_EQ(e.code(), kam::ErrorCode::precondition);
  // bad refinement settings
  e = parse_failure(std::string(kMinimal) + "levels = 2\n");
  EXPECT_NE(e.code(), kam::ErrorCode::duplicate_key);
  e = parse_failure(std::string(kMinimal) + "refine = 1\n");
  EXPECT_NE(e.code(), kam::ErrorCode::duplicate_key);
}

TEST(Scenario, TwoDimensionalChecksAcceptPlanarGrids) {
  const auto s = kam::parse_scenario(
      "[field]\nA = (-y/2, x/2, 0)\n[grid]\ndims = 64, 64\nh = 1/8\n[checks]\nsuite = landau\n");
  EXPECT_EQ(s.grid.build().dimension(), 2);
}

TEST(Scenario, RefinedGridsKeepTheBox) {
  kam::ScenarioGrid grid;
  grid.dims = {47, 47, 47};
  grid.h = 0.5;
  const auto base = grid.build();
  for (int level = -1; level <= 2; ++level) {
    const auto g = grid.refined(level, 2.0);
    const int n = static_cast<int>(std::lround(48 * std::pow(2.0, level))) - 1;
    EXPECT_EQ(g.size(0), n);
    EXPECT_DOUBLE_EQ(g.spacing(), 0.5 * 48 / (n + 1));
    for (int a = 0; a < 3; ++a) {
      EXPECT_NEAR(g.lower_wall(a), base.lower_wall(a), 1e-12);
      EXPECT_NEAR(g.upper_wall(a), base.upper_wall(a), 1e-12);
    }
  }
}

TEST(Scenario, KnownChecksIncludeConvergenceTargets) {
  for (const auto& c : kam::known_checks()) {
    if (c != "converge") EXPECT_TRUE(kam::is_known_check(c)) << c;
  }
  EXPECT_FALSE(kam::is_known_check("converge"));
  for (const auto& t : kam::convergence_targets()) EXPECT_TRUE(kam::is_known_check("converge:" + t)) << t;
  EXPECT_FALSE(kam::is_known_check("converge:"));
  EXPECT_FALSE(kam::is_known_check("LLL"));
}

TEST(BuiltinScenarios, EveryBuiltinParsesAndIsNamedConsistently) {
  ASSERT_FALSE(kam::builtin_scenarios().empty());
  for (const auto& b : kam::builtin_scenarios()) {
    const auto s = kam::parse_scenario(b.text);
    EXPECT_EQ(s.name, b.name);
    EXPECT_FALSE(b.summary.empty()) << b.name;
    EXPECT_EQ(&kam::builtin_scenario(b.name), &b);
  }
  try {
    kam::builtin_scenario("no-such-scenario");
    FAIL();
  } catch (const kam::Error& e) {
    EXPECT_EQ(e.code(), kam::ErrorCode::unknown_scenario);
  }
}
