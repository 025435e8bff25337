#include <gtest/gtest.h>

#include <cmath>

#include "kam/errors.hpp"
#include "kam/field_parser.hpp"
#include "kam/verification.hpp"

using kam::Grid;
using kam::Rational;

namespace {

kam::FieldConfig unit_b(kam::Gauge gauge = kam::Gauge::symmetric) {
  return kam::make_uniform_b({Rational(0), Rational(0), Rational(1)}, gauge);
}

// 32^3 with sigma = 4h: the smallest box that keeps 4 sigma of margin.
Grid small_grid(double h = 0.25) { return Grid::centered({32, 32, 32}, h); }

kam::WaveFunction packet(const Grid& g, std::array<double, 3> center = {0, 0, 0},
                         std::array<double, 3> k = {0, 0, 0}, int vortex = 0) {
  kam::PacketSpec s;
  s.sigma = 4 * g.spacing();
  s.center = center;
  s.wavevector = k;
  s.vortex = vortex;
  return kam::gaussian_packet(g, s);
}

}  // namespace

TEST(IdentityResidual, FallsBackToAbsoluteBelowFloor) {
  const Grid g({16}, 0.5);
  const kam::ComplexVector zero = kam::ComplexVector::Zero(16);
  kam::ComplexVector r = kam::ComplexVector::Zero(16);
  r[8] = 1e-13;
  const auto c = kam::identity_residual(g, "t", r, {&zero}, 1e-12, {});
  EXPECT_FALSE(c.relative);
  EXPECT_NEAR(c.residual, 1e-13 * std::sqrt(0.5), 1e-28);
  EXPECT_TRUE(c.passed);
}

TEST(Commutators, CanonicalAngularMomentumWithinTolerance) {
  const Grid g = small_grid();
  const auto r = kam::verify_ll_commutation(packet(g), 1.0, {.tolerance = 3e-2});
  EXPECT_TRUE(r.passed) << r.residual;
  EXPECT_EQ(r.components.size(), 3u);
  EXPECT_GT(r.residual, 1e-6);  // a genuine discretization error, not zero
}

TEST(Commutators, KineticAngularMomentumSecondOrder) {
  const auto cfg = unit_b();
  const std::vector<double> hs = {0.3, 0.2, 0.15};
  auto residual_at = [&](double h) {
    // Fixed physical box and packet width.
    const int n = static_cast<int>(std::lround(9.6 / h)) - 1;
    const Grid g = Grid::centered({n, n, n}, h);
    kam::PacketSpec s;
    s.sigma = 1.0;
    return kam::verify_LL_commutation(cfg, kam::gaussian_packet(g, s)).residual;
  };
  const auto report = kam::convergence_study("LL", hs, residual_at);
  EXPECT_TRUE(report.passed) << report.fitted_order;
}

TEST(Commutators, PiPiExactWithoutFieldAndSecondOrderWith) {
  const Grid g = small_grid();
  const auto psi = packet(g, {0, 0, 0}, {0.2, -0.1, 0.1});
  const auto zero = kam::verify_pipi_commutation(kam::make_zero_field(), psi);
  EXPECT_TRUE(zero.passed);
  EXPECT_LE(zero.residual, 1e-12);
  EXPECT_EQ(zero.tolerance, 1e-12);
  const auto constant = kam::verify_pipi_commutation(
      kam::FieldConfig(kam::parse_vector_expression("(1, 2, -3)"), {}), psi);
  EXPECT_LE(constant.residual, 1e-12);
  const auto field = kam::verify_pipi_commutation(unit_b(), psi, {.tolerance = 3e-2});
  EXPECT_TRUE(field.passed);
  EXPECT_GT(field.residual, 1e-6);
}

TEST(Commutators, GaugeCovariantResiduals) {
  // Residuals on (cfg, psi) and (cfg + grad chi, e^{i chi} psi) agree within 10%.
  const Grid g = small_grid();
  const auto psi = packet(g);
  const auto cfg = unit_b(kam::Gauge::landau);
  const auto chi = kam::parse_scalar_expression("x*y/8");
  const auto moved = kam::gauge_transform(cfg, chi);
  const auto psi_t = kam::gauge_phase(cfg, chi, psi);
  const double a = kam::verify_LL_commutation(cfg, psi).residual;
  const double b = kam::verify_LL_commutation(moved, psi_t).residual;
  EXPECT_NEAR(a / b, 1.0, 0.1);
  const double c = kam::verify_pipi_commutation(cfg, psi).residual;
  const double d = kam::verify_pipi_commutation(moved, psi_t).residual;
  EXPECT_NEAR(c / d, 1.0, 0.1);
}

TEST(ForceForms, UniformFieldAnticommutatorEqualsExpanded) {
  const Grid g = small_grid();
  const auto r = kam::verify_force_forms(unit_b(), packet(g, {0, 0, 0}, {0.2, 0, 0}),
                                         {.tolerance = 5e-2});
  EXPECT_TRUE(r.passed);
  for (const auto& c : r.components) {
    if (c.label.rfind("anticommutator-expanded", 0) == 0) {
      EXPECT_LE(c.residual, 1e-12) << c.label;
      EXPECT_EQ(c.tolerance, 1e-12);
    }
  }
}

TEST(ForceForms, NonuniformFieldAllPairsSmall) {
  const Grid g = small_grid();
  const kam::FieldConfig cfg(kam::parse_vector_expression("(0, x^2/4, 0)"), {});
  const auto r = kam::verify_force_forms(cfg, packet(g), {.tolerance = 5e-2});
  EXPECT_TRUE(r.passed) << r.residual;
  EXPECT_EQ(r.components.size(), 9u);
}

TEST(Ehrenfest, StaticTorqueRelationInUniformField) {
  const Grid g = small_grid();
  const auto r = kam::verify_angular_ehrenfest_static(unit_b(), packet(g), {.tolerance = 6e-2});
  EXPECT_TRUE(r.passed) << r.residual;
}

TEST(Ehrenfest, CentralPotentialTorqueVanishes) {
  const Grid g = small_grid();
  const auto cfg = kam::make_coulomb_quadratic(Rational(1, 2));
  for (int m : {0, 1, -2}) {
    const auto psi = packet(g, {0, 0, 0}, {0, 0, 0}, m);
    for (const auto i : kam::Index3::all()) {
      EXPECT_LE(std::abs(kam::expectation(kam::build_torque(g, cfg, i), psi)), 1e-10);
    }
  }
}

TEST(Gauge, KineticExpectationsInvariantCanonicalShiftPredicted) {
  // Landau -> symmetric with chi = B x y / 2 on a packet displaced to (a, 0, 0):
  // <l_z> moves by (q B / 2c) <x^2 - y^2> = (q B / 2c) a^2.
  const double b = 0.25;
  const auto cfg = kam::make_uniform_b({Rational(0), Rational(0), Rational(1, 4)}, kam::Gauge::landau);
  const auto chi = kam::parse_scalar_expression("x*y/8");
  const Grid g = Grid::centered({40, 40, 40}, 0.25);
  const double a = 1.0;
  const auto psi = packet(g, {a, 0, 0});
  const auto r = kam::verify_gauge_expectations(cfg, chi, psi);
  EXPECT_TRUE(r.summary.passed);
  // Discrete moments differ from the continuum by the truncated tails.
  EXPECT_NEAR(r.predicted_shift[2], b * a * a / 2, 1e-3 * b * a * a / 2);
  EXPECT_NEAR(r.canonical_shift[2], b * a * a / 2, 0.05 * b * a * a / 2);
  EXPECT_NEAR(r.energy_before, r.energy_after, 1e-2 * r.energy_before);
}

TEST(Gauge, PhaseIsUnitary) {
  const Grid g = small_grid();
  const auto psi = packet(g);
  const auto moved = kam::gauge_phase(unit_b(), kam::parse_scalar_expression("x^2*y"), psi);
  EXPECT_NEAR(moved.norm(), 1.0, 1e-12);
}

TEST(Convergence, FitRecoversKnownOrder) {
  const std::vector<double> hs = {0.4, 0.2, 0.1};
  const auto fit = kam::fit_convergence("t", hs, {0.16 * 3, 0.04 * 3, 0.01 * 3});
  EXPECT_NEAR(fit.fitted_order, 2.0, 1e-12);
  EXPECT_TRUE(fit.passed);
  const auto first = kam::fit_convergence("t", hs, {0.4, 0.2, 0.1});
  EXPECT_NEAR(first.fitted_order, 1.0, 1e-12);
  EXPECT_FALSE(first.passed);
}

TEST(Convergence, ExactResidualsAreSkipped) {
  const auto fit = kam::fit_convergence("t", {0.4, 0.2, 0.1}, {1e-15, 2e-16, 1e-16});
  EXPECT_TRUE(fit.exact);
  EXPECT_TRUE(fit.passed);
  const auto mixed = kam::fit_convergence("t", {0.4, 0.2, 0.1, 0.05}, {0.16, 0.04, 0.01, 1e-14});
  EXPECT_FALSE(mixed.fitted[3]);
  EXPECT_NEAR(mixed.fitted_order, 2.0, 1e-12);
}

TEST(Convergence, NeedsThreeDecreasingSpacings) {
  EXPECT_THROW(kam::fit_convergence("t", {0.2, 0.1}, {1, 1}), kam::Error);
  EXPECT_THROW(kam::fit_convergence("t", {0.1, 0.2, 0.05}, {1, 1, 1}), kam::Error);
  const std::vector<double> hs = {0.1, 0.1, 0.05};
  EXPECT_THROW(kam::convergence_study("t", hs, [](double h) { return h; }), kam::Error);
}

TEST(StateVariants, StayInsideMarginsAndAreSeeded) {
  const Grid g = Grid::centered({48, 48, 48}, 1.0 / 3);
  kam::PacketSpec base;
  base.sigma = 2.0;
  const auto v1 = kam::state_variants(g, base, 1);
  const auto v2 = kam::state_variants(g, base, 1);
  const auto v3 = kam::state_variants(g, base, 2);
  ASSERT_EQ(v1.size(), 3u);
  EXPECT_EQ(kam::describe(v1[1].second), kam::describe(v2[1].second));
  EXPECT_NE(kam::describe(v1[1].second), kam::describe(v3[1].second));
  for (const auto& [name, spec] : v1) {
    EXPECT_TRUE(kam::packet_precondition_violation(g, spec).empty()) << name;
  }
  EXPECT_EQ(v1[2].second.vortex, 1);
  EXPECT_EQ(kam::state_variants(Grid::centered({64}, 0.25), {.sigma = 1.0}, 1).size(), 2u);
}
