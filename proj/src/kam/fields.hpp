#pragma once

#include <string>

#include "kam/polynomial.hpp"

namespace kam {

// Gaussian units. Dimensionless defaults hbar = m = c = q = 1.
struct PhysicalConstants {
  Rational charge = 1;
  Rational hbar = 1;
  Rational mass = 1;
  Rational light_speed = 1;

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

enum class Gauge { symmetric, landau };

// Static electromagnetic configuration with polynomial potentials. The
// magnetic field (`hmag`, the curl of A) and the electric field (-grad V) are
// derived once at construction and are exact. Fields are static: the time
// derivative of A is identically zero.
class FieldConfig {
 public:
  FieldConfig() : FieldConfig(PolynomialVector{}, Polynomial{}, PhysicalConstants{}) {}
  FieldConfig(PolynomialVector vector_potential, Polynomial scalar_potential,
              PhysicalConstants constants = {});

  const PolynomialVector& vector_potential() const noexcept { return a_; }
  const Polynomial& scalar_potential() const noexcept { return v_; }
  const PolynomialVector& hmag() const noexcept { return hmag_; }
  const PolynomialVector& electric() const noexcept { return e_; }
  // dA/dt. Always the zero polynomial vector.
  PolynomialVector vector_potential_rate() const { return {}; }
  const PhysicalConstants& constants() const noexcept { return constants_; }

  // True when every component of the magnetic field is a constant.
  bool has_uniform_hmag() const;

  // Constants as doubles, for grid assembly.
  double q() const { return to_double(constants_.charge); }
  double hbar() const { return to_double(constants_.hbar); }
  double mass() const { return to_double(constants_.mass); }
  double c() const { return to_double(constants_.light_speed); }

 private:
  PolynomialVector a_;
  Polynomial v_;
  PhysicalConstants constants_;
  PolynomialVector hmag_;
  PolynomialVector e_;
};

FieldConfig make_zero_field(PhysicalConstants constants = {});

// Uniform magnetic field. Symmetric gauge A = (H x r)/2 for any direction;
// Landau gauge A = (-Bz*y, 0, 0) and requires B along z.
FieldConfig make_uniform_b(const RationalVec3& b, Gauge gauge, PhysicalConstants constants = {});

// A = 0, V = k (x^2 + y^2 + z^2); electric field -2k r.
FieldConfig make_coulomb_quadratic(const Rational& k, PhysicalConstants constants = {});

// Static gauge transformation A -> A + grad(chi); V is unchanged.
FieldConfig gauge_transform(const FieldConfig& config, const Polynomial& chi);

}  // namespace kam
