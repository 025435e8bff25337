#include "kam/fields.hpp"

#include "kam/errors.hpp"

namespace kam {

FieldConfig::FieldConfig(PolynomialVector vector_potential, Polynomial scalar_potential,
                         PhysicalConstants constants)
    : a_(std::move(vector_potential)),
      v_(std::move(scalar_potential)),
      constants_(constants),
      hmag_(curl(a_)),
      e_{{-v_.derivative(0), -v_.derivative(1), -v_.derivative(2)}} {
  if (constants_.hbar <= 0 || constants_.mass <= 0 || constants_.light_speed <= 0) {
    throw Error(ErrorCode::invalid_argument, "hbar, m and c must be positive");
  }
}

bool FieldConfig::has_uniform_hmag() const {
  return hmag_[0].is_constant() && hmag_[1].is_constant() && hmag_[2].is_constant();
}

FieldConfig make_zero_field(PhysicalConstants constants) {
  return FieldConfig(PolynomialVector{}, Polynomial{}, constants);
}

FieldConfig make_uniform_b(const RationalVec3& b, Gauge gauge, PhysicalConstants constants) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial z = Polynomial::variable(2);
  PolynomialVector a;
  if (gauge == Gauge::landau) {
    if (b[0] != 0 || b[1] != 0) {
      throw Error(ErrorCode::invalid_argument,
                  "Landau gauge A = (-Bz*y, 0, 0) needs B along z; got Bx = " +
                      b[0].str() + ", By = " + b[1].str() +
                      " (use the symmetric gauge for a tilted field)");
    }
    a[0] = -b[2] * y;
  } else {
    // A = (B x r) / 2
    const Rational half(1, 2);
    a[0] = half * (b[1] * z - b[2] * y);
    a[1] = half * (b[2] * x - b[0] * z);
    a[2] = half * (b[0] * y - b[1] * x);
  }
  return FieldConfig(std::move(a), Polynomial{}, constants);
}

FieldConfig make_coulomb_quadratic(const Rational& k, PhysicalConstants constants) {
  Polynomial v;
  for (int axis = 0; axis < 3; ++axis) v += Polynomial::monomial(k, axis == 0   ? Exponents{2, 0, 0}
                                                                     : axis == 1 ? Exponents{0, 2, 0}
                                                                                 : Exponents{0, 0, 2});
  return FieldConfig(PolynomialVector{}, std::move(v), constants);
}

FieldConfig gauge_transform(const FieldConfig& config, const Polynomial& chi) {
  return FieldConfig(config.vector_potential() + gradient(chi), config.scalar_potential(),
                     config.constants());
}

}  // namespace kam
