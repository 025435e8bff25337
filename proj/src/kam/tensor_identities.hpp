#pragma once

// Exact, grid-free checks of the Levi-Civita / Kronecker contraction
// identities behind the kinetic angular-momentum commutator. Every sum is
// enumerated over all index values; arithmetic is exact rational.

#include <cstdint>
#include <string>
#include <vector>

#include "kam/rational.hpp"

namespace kam::tensor {

// Spatial index in {1,2,3}. Public vocabulary is 1-based.
class Index3 {
 public:
  explicit Index3(int value);
  int value() const noexcept { return value_; }
  int offset() const noexcept { return value_ - 1; }
  static const std::array<Index3, 3>& all();

  friend bool operator==(Index3 a, Index3 b) { return a.value_ == b.value_; }

 private:
  int value_;
};

using Vec3 = RationalVec3;
using Mat3 = RationalMat3;

struct IdentityFailure {
  std::string step;            // which equality of the chain failed
  std::vector<int> indices;    // 1-based index tuple
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  std::string name;
  std::uint64_t cases_checked = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
  void merge(const IdentityReport& other);
};

int levi_civita(Index3 i, Index3 j, Index3 k) noexcept;
int kronecker(Index3 i, Index3 j) noexcept;

// (e_iab e_jcd - e_jab e_icd) d_bc  ==  d_id d_ja - d_ia d_jd  ==  -e_ijk e_kad
// over all 81 (i,j,a,d).
IdentityReport verify_delta_contraction();

// The four triple-epsilon contractions against x, H, each compared with
// +-(x.H) e_ijk x_k, plus their combination with weights (+1,+1,-1,-1)/4.
IdentityReport verify_quadruple_contractions(const Vec3& x, const Vec3& h);

// The chain that turns (e_iab e_jcd - e_jab e_icd) x_a x_c d_b A_d into
// (x.H) e_ijk x_k. grad_a[b][d] holds d_b A_d (0-based storage).
IdentityReport verify_field_contraction(const Vec3& x, const Mat3& grad_a);

// Magnetic field of a constant gradient: H_e = e_ebd d_b A_d.
Vec3 curl_of_gradient(const Mat3& grad_a);

// Everything above over seeded random exact inputs plus degenerate cases.
struct TensorSuiteOptions {
  std::uint64_t seed = 20240611;
  int random_cases = 100;
};
std::vector<IdentityReport> run_tensor_suite(const TensorSuiteOptions& options);

}  // namespace kam::tensor
