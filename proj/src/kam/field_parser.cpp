#include "kam/field_parser.hpp"

#include <cctype>

#include "kam/errors.hpp"

namespace kam {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ParameterTable& params, SourcePosition at)
      : text_(text), params_(params), at_(at) {}

  Polynomial parse_scalar_only() {
    Polynomial p = expression();
    expect_end();
    return p;
  }

  PolynomialVector parse_vector_only() {
    skip_space();
    const std::size_t open = pos_;
    if (!consume('(')) fail(open, "expected '(' to open a vector expression");
    PolynomialVector v;
    for (int axis = 0; axis < 3; ++axis) {
      v[axis] = expression();
      skip_space();
      if (axis < 2 && !consume(',')) fail(pos_, "expected ',' between vector components");
    }
    skip_space();
    if (peek() == ',') fail(pos_, "vector expression has more than 3 components");
    if (!consume(')')) fail(pos_, "expected ')' to close the vector expression");
    expect_end();
    return v;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw ParseError(at_.line, at_.column + offset, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_end() {
    skip_space();
    if (pos_ != text_.size())
      fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (consume('+')) {
        acc += term();
      } else if (consume('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (consume('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        const std::size_t where = pos_++;
        const Polynomial divisor = unary();
        if (!divisor.is_constant()) fail(where, "division by a non-constant expression");
        const Rational d = divisor.constant_term();
        if (d == 0) fail(where, "division by zero");
        acc *= Rational(1) / d;
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (consume('-')) return -unary();
    if (consume('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() == '^') {
      const std::size_t where = pos_++;
      skip_space();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail(where, "'^' must be followed by a nonnegative integer");
      const int exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (exponent > 32) fail(start, "exponent too large");
      return base.pow(exponent);
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (peek() == ',') fail(pos_, "unexpected ',' (vector value where a scalar is expected)");
      if (!consume(')')) fail(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return Polynomial::variable(0);
      if (name == "y") return Polynomial::variable(1);
      if (name == "z") return Polynomial::variable(2);
      auto it = params_.find(name);
      if (it == params_.end()) fail(start, "unknown identifier '" + std::string(name) + "'");
      return Polynomial::constant(it->second);
    }
    if (c == '\0') fail(pos_, "unexpected end of expression");
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  // Decimal literal converted exactly: mantissa digits over a power of ten.
  Polynomial number() {
    const std::size_t start = pos_;
    boost::multiprecision::cpp_int mantissa = 0;
    int scale = 0;
    bool any_digit = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      mantissa = mantissa * 10 + (text_[pos_++] - '0');
      any_digit = true;
    }
    if (consume('.')) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        mantissa = mantissa * 10 + (text_[pos_++] - '0');
        --scale;
        any_digit = true;
      }
    }
    if (!any_digit) fail(start, "malformed number");
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t epos = pos_++;
      int sign = 1;
      if (consume('-')) sign = -1;
      else consume('+');
      const std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail(epos, "malformed exponent");
      scale += sign * std::stoi(std::string(text_.substr(dstart, pos_ - dstart)));
    }
    Rational value(mantissa);
    const boost::multiprecision::cpp_int ten = 10;
    if (scale > 0) value *= Rational(boost::multiprecision::pow(ten, scale));
    if (scale < 0) value /= Rational(boost::multiprecision::pow(ten, -scale));
    return Polynomial::constant(value);
  }

  std::string_view text_;
  const ParameterTable& params_;
  SourcePosition at_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_scalar_expression(std::string_view text, const ParameterTable& params,
                                   SourcePosition at) {
  return ExpressionParser(text, params, at).parse_scalar_only();
}

PolynomialVector parse_vector_expression(std::string_view text, const ParameterTable& params,
                                         SourcePosition at) {
  return ExpressionParser(text, params, at).parse_vector_only();
}

Rational parse_constant_expression(std::string_view text, const ParameterTable& params,
                                   SourcePosition at) {
  const Polynomial p = parse_scalar_expression(text, params, at);
  if (!p.is_constant()) {
    throw ParseError(at.line, at.column, "expected a constant, found '" + p.to_string() + "'");
  }
  return p.constant_term();
}

}  // namespace kam
