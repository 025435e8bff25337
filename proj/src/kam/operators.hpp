#pragma once

// Grid operators for a charged particle in a static polynomial field:
// position, central-difference derivative, canonical and kinetic momentum,
// canonical (l) and kinetic (L) angular momentum, the minimal-coupling
// Hamiltonian, the three forms of the magnetic force, the Lorentz force and
// its torque.

#include <string>

#include "kam/fields.hpp"
#include "kam/linear_operator.hpp"
#include "kam/polynomial.hpp"
#include "kam/tensor_identities.hpp"

namespace kam {

using tensor::Index3;

enum class ForceForm { definition, anticommutator, expanded };
const char* to_string(ForceForm form);

// Diagonal multiplication by scale * p(r).
LinearOperator polynomial_diagonal(const Grid& grid, const Polynomial& p, double scale,
                                   std::string label);

LinearOperator build_position(const Grid& grid, Index3 axis);
// (psi[n+1] - psi[n-1]) / 2h with zero ghost values; zero on inactive axes.
LinearOperator build_derivative(const Grid& grid, Index3 axis);
// -i hbar D
LinearOperator build_momentum(const Grid& grid, Index3 axis, double hbar = 1.0);
// -i hbar D - (q/c) A_axis
LinearOperator build_pi(const Grid& grid, const FieldConfig& config, Index3 axis);

// l_i = -i hbar e_ijk x_j D_k
LinearOperator build_l(const Grid& grid, Index3 i, double hbar = 1.0);
// L_i = l_i - (q/c) e_ijk x_j A_k
LinearOperator build_L(const Grid& grid, const FieldConfig& config, Index3 i);
// Same operator assembled as e_ijk x_j pi_k.
LinearOperator build_L_from_pi(const Grid& grid, const FieldConfig& config, Index3 i);

// Sum_a pi_a pi_a / 2m + qV, as explicit sparse products of the pi_a.
LinearOperator build_hamiltonian(const Grid& grid, const FieldConfig& config);

// Compact gauge-covariant Hamiltonian: nearest-neighbour hops carrying the
// link phase (q / hbar c) * integral of A along the link, plus qV. Free of
// the spurious long-wavelength branch of the product form; used for
// eigenvalue work.
LinearOperator build_hamiltonian_compact(const Grid& grid, const FieldConfig& config);

// Magnetic force on axis k:
//   definition      (i/hbar) [pi_a pi_a, pi_k] / 2m     (lazy nested products)
//   anticommutator  (q/2mc) e_kmn {pi_m, H_n}
//   expanded        (q/mc) e_kmn H_n pi_m - (i hbar q/2mc) e_kmn d_m H_n
LinearOperator build_magnetic_force(const Grid& grid, const FieldConfig& config, Index3 k,
                                    ForceForm form);

// Lorentz force f_k = M_k (expanded) + q E_k.
LinearOperator build_lorentz_force(const Grid& grid, const FieldConfig& config, Index3 k);

// T_i = (1/2) e_ijk (x_j f_k + f_k x_j).
LinearOperator build_torque(const Grid& grid, const FieldConfig& config, Index3 i);

// Diagonal (q/c)(r.H) x_k: the magnetic correction in [L_i, L_j].
LinearOperator build_LL_correction(const Grid& grid, const FieldConfig& config, Index3 k);

// Operator by label: x1..x3, D1..D3, p1..p3, pi1..pi3, l1..l3, L1..L3,
// T1..T3, f1..f3, H (Hamiltonian), 1 (identity).
LinearOperator build_named(const Grid& grid, const FieldConfig& config, const std::string& label);

}  // namespace kam
