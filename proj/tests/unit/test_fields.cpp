#include <gtest/gtest.h>

#include "kam/errors.hpp"
#include "kam/field_parser.hpp"
#include "kam/fields.hpp"

using kam::Polynomial;
using kam::Rational;

TEST(Fields, UniformFieldInBothGauges) {
  const auto sym = kam::make_uniform_b({Rational(0), Rational(0), Rational(3)}, kam::Gauge::symmetric);
  const auto lan = kam::make_uniform_b({Rational(0), Rational(0), Rational(3)}, kam::Gauge::landau);
  EXPECT_EQ(sym.hmag(), lan.hmag());
  EXPECT_EQ(sym.hmag()[2], Polynomial::constant(Rational(3)));
  EXPECT_TRUE(sym.has_uniform_hmag());
  EXPECT_EQ(lan.vector_potential()[0], Rational(-3) * Polynomial::variable(1));
}

TEST(Fields, SymmetricGaugeInAnyDirection) {
  const kam::RationalVec3 b = {Rational(1), Rational(-2), Rational(1, 2)};
  const auto cfg = kam::make_uniform_b(b, kam::Gauge::symmetric);
  for (int a = 0; a < 3; ++a) EXPECT_EQ(cfg.hmag()[a], Polynomial::constant(b[a]));
}

TEST(Fields, LandauGaugeNeedsFieldAlongZ) {
  EXPECT_THROW(kam::make_uniform_b({Rational(1), Rational(0), Rational(1)}, kam::Gauge::landau),
               kam::Error);
}

TEST(Fields, ElectricFieldIsMinusGradient) {
  const auto cfg = kam::make_coulomb_quadratic(Rational(1, 2));
  const auto e = cfg.electric();
  EXPECT_EQ(e[0], Rational(-1) * Polynomial::variable(0));
  EXPECT_TRUE(cfg.hmag().is_zero());
  EXPECT_TRUE(cfg.vector_potential_rate().is_zero());
}

TEST(Fields, GaugeTransformKeepsMagneticField) {
  const auto lan = kam::make_uniform_b({Rational(0), Rational(0), Rational(1)}, kam::Gauge::landau);
  const Polynomial chi = kam::parse_scalar_expression("x*y/2");
  const auto moved = kam::gauge_transform(lan, chi);
  EXPECT_EQ(moved.hmag(), lan.hmag());
  const auto sym = kam::make_uniform_b({Rational(0), Rational(0), Rational(1)}, kam::Gauge::symmetric);
  EXPECT_EQ(moved.vector_potential(), sym.vector_potential());
}

TEST(Fields, ConstantsMustBePositive) {
  kam::PhysicalConstants c;
  c.mass = 0;
  EXPECT_THROW(kam::FieldConfig({}, {}, c), std::exception);
  const kam::FieldConfig defaults;
  EXPECT_EQ(defaults.q(), 1.0);
  EXPECT_EQ(defaults.hbar(), 1.0);
  EXPECT_EQ(defaults.mass(), 1.0);
  EXPECT_EQ(defaults.c(), 1.0);
}
