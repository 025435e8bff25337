#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>

namespace kam {

// Exact arbitrary-precision rational; used wherever an identity must hold
// exactly rather than to a tolerance.
using Rational = boost::multiprecision::cpp_rational;
using RationalVec3 = std::array<Rational, 3>;
using RationalMat3 = std::array<std::array<Rational, 3>, 3>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace kam
