#pragma once

#include <array>
#include <map>
#include <string>

#include "kam/rational.hpp"

namespace kam {

using Exponents = std::array<int, 3>;

// Multivariate polynomial in (x, y, z) with exact rational coefficients.
// Terms with zero coefficient are never stored, so two polynomials are equal
// iff their term maps are equal.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rational& value);
  static Polynomial variable(int axis);  // axis in {0,1,2}
  static Polynomial monomial(const Rational& coefficient, const Exponents& exponents);

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  int degree() const noexcept;
  // Value of the constant term (0 when absent).
  Rational constant_term() const;

  Polynomial derivative(int axis) const;
  // Antiderivative in one variable with zero constant of integration.
  Polynomial antiderivative(int axis) const;

  Rational evaluate(const RationalVec3& point) const;
  double evaluate(double x, double y, double z) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial pow(int exponent) const;
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

struct PolynomialVector {
  std::array<Polynomial, 3> components;

  const Polynomial& operator[](int axis) const { return components.at(axis); }
  Polynomial& operator[](int axis) { return components.at(axis); }

  bool is_zero() const;
  RationalVec3 evaluate(const RationalVec3& point) const;
  std::array<double, 3> evaluate(double x, double y, double z) const;
  std::string to_string() const;

  friend PolynomialVector operator+(const PolynomialVector& a, const PolynomialVector& b);
  friend PolynomialVector operator-(const PolynomialVector& a, const PolynomialVector& b);
  friend bool operator==(const PolynomialVector& a, const PolynomialVector& b) {
    return a.components == b.components;
  }
};

PolynomialVector gradient(const Polynomial& p);
PolynomialVector curl(const PolynomialVector& v);
Polynomial divergence(const PolynomialVector& v);

}  // namespace kam
