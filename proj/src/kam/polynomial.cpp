#include "kam/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kam {

namespace {

constexpr const char* kVariableNames[3] = {"x", "y", "z"};

Rational rational_pow(const Rational& base, int exponent) {
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Polynomial Polynomial::constant(const Rational& value) {
  return monomial(value, {0, 0, 0});
}

Polynomial Polynomial::variable(int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  Exponents e{0, 0, 0};
  e[axis] = 1;
  return monomial(1, e);
}

Polynomial Polynomial::monomial(const Rational& coefficient, const Exponents& exponents) {
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial p;
  p.add_term(exponents, coefficient);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

int Polynomial::degree() const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents{0, 0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponents d = e;
    d[axis] -= 1;
    out.add_term(d, c * e[axis]);
  }
  return out;
}

Polynomial Polynomial::antiderivative(int axis) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[axis] += 1;
    out.add_term(d, c / d[axis]);
  }
  return out;
}

Rational Polynomial::evaluate(const RationalVec3& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c * rational_pow(point[0], e[0]) * rational_pow(point[1], e[1]) *
           rational_pow(point[2], e[2]);
  }
  return sum;
}

double Polynomial::evaluate(double x, double y, double z) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += to_double(c) * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of a polynomial");
  Polynomial r = constant(1);
  for (int i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    const bool has_var = e[0] + e[1] + e[2] > 0;
    if (!unit || !has_var) os << mag;
    bool need_star = !unit || !has_var;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << kVariableNames[v];
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

bool PolynomialVector::is_zero() const {
  return components[0].is_zero() && components[1].is_zero() && components[2].is_zero();
}

RationalVec3 PolynomialVector::evaluate(const RationalVec3& point) const {
  return {components[0].evaluate(point), components[1].evaluate(point),
          components[2].evaluate(point)};
}

std::array<double, 3> PolynomialVector::evaluate(double x, double y, double z) const {
  return {components[0].evaluate(x, y, z), components[1].evaluate(x, y, z),
          components[2].evaluate(x, y, z)};
}

std::string PolynomialVector::to_string() const {
  return "(" + components[0].to_string() + ", " + components[1].to_string() + ", " +
         components[2].to_string() + ")";
}

PolynomialVector operator+(const PolynomialVector& a, const PolynomialVector& b) {
  return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
}

PolynomialVector operator-(const PolynomialVector& a, const PolynomialVector& b) {
  return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
}

PolynomialVector gradient(const Polynomial& p) {
  return {{p.derivative(0), p.derivative(1), p.derivative(2)}};
}

PolynomialVector curl(const PolynomialVector& v) {
  return {{v[2].derivative(1) - v[1].derivative(2), v[0].derivative(2) - v[2].derivative(0),
           v[1].derivative(0) - v[0].derivative(1)}};
}

Polynomial divergence(const PolynomialVector& v) {
  return v[0].derivative(0) + v[1].derivative(1) + v[2].derivative(2);
}

}  // namespace kam
