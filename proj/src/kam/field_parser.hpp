#pragma once

// Plain-text field expressions, e.g.
//
//   A   = (-B*y/2, B*x/2, 0)
//   V   = k*(x^2 + y^2 + z^2)
//   chi = B*x*y/2
//
// Literals are exact: "0.25" is 1/4 and "1e-3" is 1/1000. Variables are x, y,
// z and any named parameter supplied by the caller. Division is only by
// nonzero constants; "^" takes a nonnegative integer literal.

#include <map>
#include <string>
#include <string_view>

#include "kam/polynomial.hpp"

namespace kam {

using ParameterTable = std::map<std::string, Rational, std::less<>>;

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

// All parse functions throw ParseError with positions offset by `at`, so a
// caller embedding an expression in a larger file gets file coordinates.
Polynomial parse_scalar_expression(std::string_view text, const ParameterTable& params = {},
                                   SourcePosition at = {});
PolynomialVector parse_vector_expression(std::string_view text,
                                         const ParameterTable& params = {},
                                         SourcePosition at = {});
// Constant-valued expression; rejects any dependence on x, y, z.
Rational parse_constant_expression(std::string_view text, const ParameterTable& params = {},
                                   SourcePosition at = {});

}  // namespace kam
